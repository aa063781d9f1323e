// Copyright 2026 The apnphi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "apnphi/apn.hpp"
#include "apnphi/ccz.hpp"
#include "apnphi/criteria.hpp"
#include "apnphi/geometry.hpp"
#include "apnphi/identity_suite.hpp"
#include "apnphi/phi.hpp"
#include "json.hpp"

namespace apnphi::cli {

namespace {

using Json = nlohmann::ordered_json;

struct FieldArgs {
    unsigned m = 0;
    std::string modulus;
    std::string spec;

    void add_to(CLI::App* app) {
        app->add_option("--m", m, "field degree m of GF(2^m)");
        app->add_option("--modulus", modulus, "irreducible modulus, e.g. 0x25");
        app->add_option("--field", spec, "field spec m=<int>[,mod=0x<hex>]");
    }

    BinaryFieldPtr resolve(bool required = true) const {
        FieldSpec fs;
        if (!spec.empty()) {
            fs = parse_field_spec(spec);
        } else {
            fs.m = m;
        }
        if (!modulus.empty()) fs.modulus = parse_bits(modulus);
        if (fs.m == 0) {
            if (required || fs.modulus) throw DomainError("usage", "a field is required: pass --m or --field");
            return gf2();
        }
        return make_field(fs);
    }
};

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos) throw ParseError("range must look like lo..hi, got '" + text + "'");
    const Bits lo = parse_bits(text.substr(0, pos)), hi = parse_bits(text.substr(pos + 2));
    if (lo > hi || hi > 64) throw ParseError("bad range '" + text + "'");
    return {static_cast<unsigned>(lo), static_cast<unsigned>(hi)};
}

Json with_schema(Json j) {
    j["schema_version"] = kSchemaVersion;
    return j;
}

Json report_json(const DivisibilityReport& r) {
    Json j;
    j["divisible"] = r.divisible;
    if (r.quotient) j["quotient"] = to_string(*r.quotient);
    if (r.witness) j["witness"] = r.witness->to_string();
    return j;
}

Json apn_json(const ApnReport& r, bool timing) {
    Json j;
    j["m"] = r.m;
    j["delta"] = r.delta;
    j["is_apn"] = r.is_apn;
    Json spec = Json::object();
    for (const auto& [c, n] : r.spectrum) spec[std::to_string(c)] = n;
    j["spectrum"] = spec;
    if (timing) j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

Json count_json(const PointCountReport& r) {
    Json j;
    j["k"] = r.k;
    j["count"] = r.count;
    j["degree"] = r.degree;
    j["band_low"] = r.band_low;
    j["band_high"] = r.band_high;
    j["in_band"] = r.in_band();
    return j;
}

// "auto:A", "auto:A^k", "auto:phi<e>", "auto:phi<e>^k"; otherwise the poly grammar.
TriPoly parse_divisor(const std::string& text, const FieldPtr& F) {
    if (text.rfind("auto:", 0) != 0) return parse_tripoly(text, F);
    std::string body = text.substr(5);
    unsigned k = 1;
    if (const auto hat = body.find('^'); hat != std::string::npos) {
        k = static_cast<unsigned>(parse_bits(body.substr(hat + 1)));
        body = body.substr(0, hat);
    }
    if (body == "A") return pow(denominator_poly(F), k);
    if (body.rfind("phi", 0) == 0 && body.size() > 3)
        return pow(phi_power(static_cast<unsigned>(parse_bits(body.substr(3))), F), k);
    throw ParseError("unknown macro '" + text + "'; expected auto:A^k or auto:phi<e>^k");
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"apnphi: exact tools for APN functions of degree 4e over GF(2^m)", "apnphi"};
    app.require_subcommand(1);

    // field
    auto* field_cmd = app.add_subcommand("field", "finite field information")->require_subcommand(1);
    auto* field_info = field_cmd->add_subcommand("info", "modulus, cubic extension and sanity checks");
    FieldArgs fa_info;
    fa_info.add_to(field_info);

    // apn
    auto* apn_cmd = app.add_subcommand("apn", "differential uniformity")->require_subcommand(1);
    auto* apn_check = apn_cmd->add_subcommand("check", "APN report for f over GF(2^m)");
    auto* apn_scan = apn_cmd->add_subcommand("scan", "APN reports for f over GF(2^m), m in a range");
    FieldArgs fa_apn;
    fa_apn.add_to(apn_check);
    std::string apn_f, apn_range = "2..10", apn_format = "json";
    unsigned apn_threads = 0;
    bool apn_large = false, apn_timing = false;
    for (auto* c : {apn_check, apn_scan}) {
        c->add_option("--f", apn_f, "function in the poly grammar")->required();
        c->add_option("--threads", apn_threads, "worker threads (0 = all cores)");
        c->add_flag("--allow-large", apn_large, "lift the m <= 14 budget");
        c->add_flag("--timing", apn_timing, "include elapsed_seconds");
    }
    apn_scan->add_option("--m-range", apn_range, "lo..hi");
    apn_scan->add_option("--format", apn_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    // phi
    auto* phi_cmd = app.add_subcommand("phi", "the polynomials phi_e and phi_f")->require_subcommand(1);
    auto* phi_show = phi_cmd->add_subcommand("show", "print phi_e");
    auto* phi_of_cmd = phi_cmd->add_subcommand("of", "print phi_f");
    auto* phi_div = phi_cmd->add_subcommand("divides", "test p | phi_f");
    unsigned phi_e = 0;
    std::string phi_f, phi_p;
    FieldArgs fa_phi;
    phi_show->add_option("--e", phi_e, "exponent e >= 3")->required();
    for (auto* c : {phi_show, phi_of_cmd, phi_div}) fa_phi.add_to(c);
    for (auto* c : {phi_of_cmd, phi_div}) c->add_option("--f", phi_f, "function in the poly grammar")->required();
    phi_div->add_option("--p", phi_p, "divisor: poly grammar or auto:A^k / auto:phi<e>^k")->required();

    // divisor scan
    auto* divisor_cmd = app.add_subcommand("rodier", "divisor search for phi_f")->require_subcommand(1);
    auto* divisor_scan_cmd = divisor_cmd->add_subcommand("scan", "test A + c1 phi_5 + c1^3 | phi_f over trace-zero c1");
    FieldArgs fa_rod;
    fa_rod.add_to(divisor_scan_cmd);
    std::string rod_f;
    std::uint64_t rod_sample = 0, rod_seed = kDefaultScanSeed;
    unsigned rod_threads = 0;
    divisor_scan_cmd->add_option("--f", rod_f, "function of degree 4e")->required();
    divisor_scan_cmd->add_option("--sample", rod_sample, "number of random candidates when m > 4");
    divisor_scan_cmd->add_option("--seed", rod_seed, "sampling seed");
    divisor_scan_cmd->add_option("--threads", rod_threads, "worker threads (0 = all cores)");

    // ccz
    auto* ccz_cmd = app.add_subcommand("ccz", "decomposition f = (x^e + S) o L")->require_subcommand(1);
    auto* ccz_dec = ccz_cmd->add_subcommand("decompose", "compute g = f o L^{-1} and split it");
    FieldArgs fa_ccz;
    fa_ccz.add_to(ccz_dec);
    std::string ccz_f, ccz_c1;
    ccz_dec->add_option("--f", ccz_f, "function of degree 4e")->required();
    ccz_dec->add_option("--c1", ccz_c1, "trace-zero element of GF(q^3), packed hex")->required();

    // curve / surface
    auto* curve_cmd = app.add_subcommand("curve", "point counts on phi = 0 with z = 1")->require_subcommand(1);
    auto* curve_count = curve_cmd->add_subcommand("count", "point counts per k");
    auto* curve_verdict = curve_cmd->add_subcommand("verdict", "point counts and the evidence verdict");
    unsigned curve_e = 0;
    std::string curve_f, curve_range = "4..12";
    bool curve_with_verdict = false, curve_large = false;
    unsigned curve_threads = 0;
    FieldArgs fa_curve;
    for (auto* c : {curve_count, curve_verdict}) {
        c->add_option("--e", curve_e, "use phi_e");
        c->add_option("--f", curve_f, "use phi_f (with --m)");
        c->add_option("--k-range", curve_range, "lo..hi");
        c->add_option("--threads", curve_threads, "worker threads (0 = all cores)");
        c->add_flag("--allow-large", curve_large, "lift the k <= 12 budget");
        fa_curve.add_to(c);
    }
    curve_count->add_flag("--verdict", curve_with_verdict, "also report the evidence verdict");

    auto* surface_cmd = app.add_subcommand("surface", "point counts on phi_f = 0")->require_subcommand(1);
    auto* surface_count = surface_cmd->add_subcommand("count", "affine points over GF(2^(m k))");
    FieldArgs fa_surf;
    fa_surf.add_to(surface_count);
    std::string surf_f, surf_p;
    unsigned surf_mult = 1;
    bool surf_large = false;
    surface_count->add_option("--f", surf_f, "use phi_f");
    surface_count->add_option("--p", surf_p, "use this trivariate polynomial (or auto:A^k / auto:phi<e>^k)");
    surface_count->add_option("--multiplier", surf_mult, "count over GF(2^(m k))");
    surface_count->add_flag("--allow-large", surf_large, "lift the Q^2 <= 2^20 budget");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "identity checks")->require_subcommand(1);
    auto* verify_paper = verify_cmd->add_subcommand("paper", "run the full identity suite");
    std::string verify_format = "text";
    verify_paper->add_option("--format", verify_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        emit(err, with_schema({{"error", "usage"}, {"message", e.what()}}));
        return 1;
    }

    try {
        if (field_info->parsed()) {
            const auto F = fa_info.resolve();
            const auto ext = CubicExtension::make(F);
            Json j;
            j["m"] = F->m();
            j["order"] = F->order();
            j["modulus"] = to_hex(F->modulus());
            j["generator"] = to_hex(F->generator());
            Json e;
            e["g_packed"] = to_hex(ext->packed_g());
            e["g"] = {to_hex(ext->coord(ext->packed_g(), 0)), to_hex(ext->coord(ext->packed_g(), 1)),
                      to_hex(ext->coord(ext->packed_g(), 2))};
            e["order"] = ext->order();
            j["extension"] = e;
            Json checks;
            checks["modulus_irreducible"] = is_irreducible_gf2(F->modulus());
            std::uint64_t order = 1;
            for (Bits a = F->generator(); a != 1; a = F->mul(a, F->generator())) ++order;
            checks["generator_order_q_minus_1"] = F->order() == 2 || order == F->order() - 1;
            bool frob3 = true, trace_ok = true;
            for (Bits a = 0; a < std::min<Bits>(ext->order(), 4096); ++a) {
                frob3 = frob3 && ext->frobenius(ext->frobenius(ext->frobenius(a))) == a;
                trace_ok = trace_ok && ext->in_base(ext->rel_trace(a));
            }
            checks["frobenius_order_3"] = frob3;
            checks["trace_in_base"] = trace_ok;
            j["checks"] = checks;
            emit(out, with_schema(j));
            return 0;
        }
        if (apn_check->parsed()) {
            const auto F = fa_apn.resolve();
            ApnOptions opts;
            opts.threads = apn_threads;
            opts.allow_large = apn_large;
            const auto rep = differential_uniformity(parse_unipoly(apn_f, F), F, opts);
            emit(out, with_schema(apn_json(rep, apn_timing)));
            return 0;
        }
        if (apn_scan->parsed()) {
            const auto [lo, hi] = parse_range(apn_range);
            ApnOptions opts;
            opts.threads = apn_threads;
            opts.allow_large = apn_large;
            const auto rows = scan_extensions(parse_unipoly(apn_f, gf2()), lo, hi, opts);
            if (apn_format == "csv") {
                out << "m,delta,is_apn,error\n";
                for (const auto& r : rows) {
                    out << r.m << ",";
                    if (r.report)
                        out << r.report->delta << "," << (r.report->is_apn ? "true" : "false") << ",\n";
                    else
                        out << ",,\"" << r.error << "\"\n";
                }
            } else {
                Json j;
                j["f"] = apn_f;
                Json arr = Json::array();
                for (const auto& r : rows) {
                    Json row;
                    row["m"] = r.m;
                    if (r.report) {
                        row["delta"] = r.report->delta;
                        row["is_apn"] = r.report->is_apn;
                        if (apn_timing) row["elapsed_seconds"] = r.report->elapsed_seconds;
                    } else {
                        row["error"] = r.error;
                    }
                    arr.push_back(row);
                }
                j["results"] = arr;
                emit(out, with_schema(j));
            }
            return 0;
        }
        if (phi_show->parsed()) {
            out << to_string(phi_power(phi_e, fa_phi.resolve(false))) << "\n";
            return 0;
        }
        if (phi_of_cmd->parsed()) {
            const auto F = fa_phi.resolve(false);
            out << to_string(phi_of(parse_unipoly(phi_f, F))) << "\n";
            return 0;
        }
        if (phi_div->parsed()) {
            const auto F = fa_phi.resolve(false);
            const TriPoly phi = phi_of(parse_unipoly(phi_f, F));
            const TriPoly p = parse_divisor(phi_p, F);
            Json j = report_json(divides(p, phi));
            j["p"] = to_string(p);
            emit(out, with_schema(j));
            return 0;
        }
        if (divisor_scan_cmd->parsed()) {
            const auto F = fa_rod.resolve();
            ScanOptions opts;
            opts.allow_sampling = rod_sample > 0;
            opts.samples = rod_sample;
            opts.seed = rod_seed;
            opts.threads = rod_threads;
            const auto res = divisor_scan(parse_unipoly(rod_f, F), opts);
            const auto ext = CubicExtension::make(F);
            Json j;
            j["m"] = F->m();
            j["extension_g"] = to_hex(ext->packed_g());
            j["mode"] = res.exhaustive ? "exhaustive" : "sampled";
            if (!res.exhaustive) j["seed"] = res.seed;
            j["candidates"] = res.candidates;
            Json hits = Json::array();
            for (const auto& h : res.hits) {
                Json hj;
                const Bits c = h.c1.bits();
                hj["c1"] = to_hex(c);
                hj["conjugates"] = {to_hex(c), to_hex(ext->frobenius(c)), to_hex(ext->frobenius(ext->frobenius(c)))};
                hj["single"] = report_json(h.report.single);
                hj["product"] = report_json(h.report.product);
                hits.push_back(hj);
            }
            j["hits"] = hits;
            emit(out, with_schema(j));
            return 0;
        }
        if (ccz_dec->parsed()) {
            const auto F = fa_ccz.resolve();
            const auto ext = CubicExtension::make(F);
            const Bits c = parse_bits(ccz_c1);
            if (!ext->contains(c)) throw DomainError("context_mismatch", "c1 = " + ccz_c1 + " is not in GF(q^3)");
            const auto res = ccz_decompose(parse_unipoly(ccz_f, F), FieldElem(ext, c));
            Json j;
            j["decomposable"] = res.decomposable();
            if (res.decomposition) {
                const auto& d = *res.decomposition;
                j["e"] = d.e;
                j["leading"] = to_hex(d.leading);
                j["S"] = to_string(d.S);
                j["residual"] = to_string(d.residual);
                j["residual_in_f"] = to_string(d.residual_in_f);
                j["g"] = to_string(d.g);
                j["L"] = to_string(d.L.to_unipoly());
                j["L_inverse"] = to_string(d.L_inverse.to_unipoly());
            } else {
                j["reason"] = res.reason;
            }
            emit(out, with_schema(j));
            return 0;
        }
        if (curve_count->parsed() || curve_verdict->parsed()) {
            TriPoly curve(gf2());
            if (curve_e != 0 && curve_f.empty()) {
                curve = dehomogenize(phi_power(curve_e, fa_curve.resolve(false)));
            } else if (curve_e == 0 && !curve_f.empty()) {
                curve = dehomogenize(phi_of(parse_unipoly(curve_f, fa_curve.resolve(false))));
            } else {
                throw DomainError("usage", "pass exactly one of --e and --f");
            }
            const auto [lo, hi] = parse_range(curve_range);
            CountOptions opts;
            opts.threads = curve_threads;
            if (curve_large) opts.max_curve_k = BinaryField::kMaxDegree;
            Json j;
            j["polynomial"] = to_string(curve);
            if (curve_verdict->parsed() || curve_with_verdict) {
                std::vector<unsigned> ks;
                for (unsigned k = lo; k <= hi; ++k) ks.push_back(k);
                const auto ev = component_evidence(curve, ks, opts);
                Json arr = Json::array();
                for (const auto& c : ev.counts) arr.push_back(count_json(c));
                j["counts"] = arr;
                j["verdict"] = to_string(ev.verdict);
                if (ev.period) j["period"] = ev.period;
                j["explanation"] = ev.explanation;
            } else {
                Json arr = Json::array();
                for (unsigned k = lo; k <= hi; ++k) arr.push_back(count_json(count_curve_points(curve, k, opts)));
                j["counts"] = arr;
            }
            emit(out, with_schema(j));
            return 0;
        }
        if (surface_count->parsed()) {
            const auto F = fa_surf.resolve(false);
            TriPoly p(F);
            if (!surf_f.empty() && surf_p.empty())
                p = phi_of(parse_unipoly(surf_f, F));
            else if (surf_f.empty() && !surf_p.empty())
                p = parse_divisor(surf_p, F);
            else
                throw DomainError("usage", "pass exactly one of --f and --p");
            CountOptions opts;
            if (surf_large) opts.max_surface_log2 = 2 * BinaryField::kMaxDegree;
            Json j = count_json(count_surface_points(p, surf_mult, opts));
            j["polynomial"] = to_string(p);
            emit(out, with_schema(j));
            return 0;
        }
        if (verify_paper->parsed()) {
            const auto checks = run_identity_suite();
            const bool ok = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
            if (verify_format == "json") {
                Json arr = Json::array();
                for (const auto& c : checks) arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
                emit(out, with_schema({{"checks", arr}, {"all_passed", ok}}));
            } else {
                for (const auto& c : checks)
                    out << (c.passed ? "PASS  " : "FAIL  ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]")
                        << "\n";
                out << (ok ? "all checks passed" : "some checks FAILED") << "\n";
            }
            return ok ? 0 : 1;
        }
    } catch (const BudgetExceeded& e) {
        emit(err, with_schema({{"error", "budget_exceeded"}, {"message", e.what()}}));
        return 2;
    } catch (const DomainError& e) {
        emit(err, with_schema({{"error", e.code()}, {"message", e.what()}}));
        return 1;
    }
    emit(err, with_schema({{"error", "usage"}, {"message", "no command given"}}));
    return 1;
}

}  // namespace apnphi::cli
