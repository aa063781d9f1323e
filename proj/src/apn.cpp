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

#include "apnphi/apn.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

namespace apnphi {

namespace {

struct Partial {
    std::uint64_t delta = 0;
    std::map<std::uint64_t, std::uint64_t> spectrum;
};

// Counts for a in {first, first + step, ...}. Each solution x pairs with
// x + a, so only x < x + a is visited and counts are doubled at the end.
Partial count_shard(const std::vector<Bits>& table, Bits first, Bits step) {
    const Bits q = table.size();
    Partial out;
    std::vector<std::uint32_t> counts(q, 0);
    std::vector<Bits> touched;
    touched.reserve(q / 2);
    for (Bits a = first; a < q; a += step) {
        for (Bits x = 0; x < q; ++x) {
            const Bits y = x ^ a;
            if (y < x) continue;
            const Bits b = table[x] ^ table[y];
            if (counts[b]++ == 0) touched.push_back(b);
        }
        for (Bits b : touched) {
            const std::uint64_t c = 2 * std::uint64_t{counts[b]};
            out.delta = std::max(out.delta, c);
            ++out.spectrum[c];
            counts[b] = 0;
        }
        out.spectrum[0] += q - touched.size();
        touched.clear();
    }
    return out;
}

void check_budget(unsigned m, const ApnOptions& opts) {
    if (m > opts.max_m && !opts.allow_large)
        throw BudgetExceeded("m = " + std::to_string(m) + " exceeds the budget m <= " + std::to_string(opts.max_m) +
                             "; use --allow-large to override");
}

}  // namespace

std::vector<Bits> build_table(const UniPoly& f, const BinaryFieldPtr& field) {
    const UniPoly g = f.embed(field);
    std::vector<Bits> table(field->order());
    for (Bits x = 0; x < table.size(); ++x) table[x] = uni_eval(g, x);
    return table;
}

ApnReport differential_uniformity(const std::vector<Bits>& table, unsigned m, const ApnOptions& opts) {
    if (m == 0 || m > BinaryField::kMaxDegree || table.size() != (Bits{1} << m))
        throw DomainError("bad_table", "value table must have length 2^m with 1 <= m <= 16");
    check_budget(m, opts);
    const auto start = std::chrono::steady_clock::now();

    const Bits q = table.size();
    unsigned workers = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<Bits>(workers, q - 1));

    std::vector<Partial> parts(workers);
    if (workers == 1) {
        parts[0] = count_shard(table, 1, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] { parts[w] = count_shard(table, 1 + w, workers); });
        for (auto& t : pool) t.join();
    }

    ApnReport rep;
    rep.m = m;
    for (const auto& p : parts) {
        rep.delta = std::max(rep.delta, p.delta);
        for (const auto& [c, n] : p.spectrum) rep.spectrum[c] += n;
    }
    rep.is_apn = rep.delta == 2;
    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

ApnReport differential_uniformity(const UniPoly& f, const BinaryFieldPtr& field, const ApnOptions& opts) {
    check_budget(field->m(), opts);
    return differential_uniformity(build_table(f, field), field->m(), opts);
}

ApnReport differential_uniformity(const UniPoly& f, const ApnOptions& opts) {
    auto field = std::dynamic_pointer_cast<const BinaryField>(f.field());
    if (!field) throw DomainError("not_binary_field", "differential analysis needs a function over GF(2^m)");
    return differential_uniformity(f, field, opts);
}

std::vector<ScanEntry> scan_extensions(const UniPoly& f, unsigned m_lo, unsigned m_hi, const ApnOptions& opts) {
    UniPoly base(gf2());
    for (const auto& [e, c] : f.terms()) {
        if (c > 1) throw DomainError("not_prime_field", "scan needs coefficients in GF(2)");
        base.add_term(e, c);
    }
    std::vector<ScanEntry> out;
    for (unsigned m = m_lo; m <= m_hi; ++m) {
        ScanEntry entry;
        entry.m = m;
        try {
            entry.report = differential_uniformity(base, BinaryField::make(m), opts);
        } catch (const std::exception& ex) {
            entry.error = ex.what();
        }
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace apnphi
