#include "regge6j/orbit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "regge6j/errors.hpp"
#include "regge6j/regge.hpp"
#include "regge6j/super.hpp"

namespace regge6j {

namespace {

// Each aspect as a permutation of the doubled-tuple indices:
// out[i] = in[map[i]]. Flipping a pair of columns exchanges the J and j of
// both; maps are ordered by column permutation, then flip pattern.
using AspectMap = std::array<std::uint8_t, 6>;

const std::array<AspectMap, 24>& aspect_maps() {
    static const std::array<AspectMap, 24> maps = [] {
        std::array<AspectMap, 24> out{};
        constexpr std::array<std::array<int, 3>, 6> perms{
            {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
        constexpr std::array<std::array<bool, 3>, 4> flips{
            {{false, false, false}, {true, true, false}, {true, false, true}, {false, true, true}}};
        std::size_t idx = 0;
        for (const auto& perm : perms) {
            for (const auto& flip : flips) {
                AspectMap m{};
                for (int pos = 0; pos < 3; ++pos) {
                    const int col = perm[static_cast<std::size_t>(pos)];
                    const bool f = flip[static_cast<std::size_t>(col)];
                    m[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(f ? col + 3 : col);
                    m[static_cast<std::size_t>(pos + 3)] = static_cast<std::uint8_t>(f ? col : col + 3);
                }
                out[idx++] = m;
            }
        }
        return out;
    }();
    return maps;
}

std::array<int, 6> apply_map(const AspectMap& m, const std::array<int, 6>& d) {
    std::array<int, 6> out;
    for (std::size_t i = 0; i < 6; ++i) out[i] = d[m[i]];
    return out;
}

std::array<int, 6> canonical_doubled(const std::array<int, 6>& d) {
    std::array<int, 6> best = d;
    for (const auto& m : aspect_maps()) {
        const auto cand = apply_map(m, d);
        if (cand < best) best = cand;
    }
    return best;
}

SixJSymbol from_doubled(const std::array<int, 6>& d) {
    return SixJSymbol{{d[0]}, {d[1]}, {d[2]}, {d[3]}, {d[4]}, {d[5]}};
}

PartitionClass class_from_rep_count(std::size_t n, const SixJSymbol& s) {
    switch (n) {
    case 1: return PartitionClass::S0;
    case 2: return PartitionClass::S1;
    case 3: return PartitionClass::S2;
    case 6: return PartitionClass::S5;
    default:
        throw internal_error("closure of " + to_string(s) + " has " + std::to_string(n) +
                             " representatives");
    }
}

// Largest multiplicity in a small sorted-on-the-fly multiset.
template <std::size_t N>
int max_multiplicity(std::array<int, N> v) {
    std::sort(v.begin(), v.end());
    int best = 1, run = 1;
    for (std::size_t i = 1; i < N; ++i) {
        run = v[i] == v[i - 1] ? run + 1 : 1;
        best = std::max(best, run);
    }
    return best;
}

} // namespace

int class_index(PartitionClass c) {
    switch (c) {
    case PartitionClass::S0: return 0;
    case PartitionClass::S1: return 1;
    case PartitionClass::S2: return 2;
    case PartitionClass::S5: return 5;
    }
    throw std::domain_error("bad partition class");
}

std::string to_string(PartitionClass c) { return "S" + std::to_string(class_index(c)); }

std::array<SixJSymbol, 24> s4_rearrangements(const SixJSymbol& s) {
    std::array<SixJSymbol, 24> out;
    const auto d = s.doubled();
    const auto& maps = aspect_maps();
    for (std::size_t a = 0; a < 24; ++a) out[a] = from_doubled(apply_map(maps[a], d));
    return out;
}

SixJSymbol canonical_form(const SixJSymbol& s) { return from_doubled(canonical_doubled(s.doubled())); }

bool is_canonical(const SixJSymbol& s) {
    const auto d = s.doubled();
    for (const auto& m : aspect_maps()) {
        for (std::size_t i = 0; i < 6; ++i) {
            const int v = d[m[i]];
            if (v < d[i]) return false; // this aspect is smaller
            if (v > d[i]) break;        // this aspect is larger; next
        }
    }
    return true;
}

OrbitReport regge_star(const SixJSymbol& s, Mode mode) {
    if (!is_valid(s, mode))
        throw std::domain_error("closure of an invalid symbol " + to_string(s));
    const auto start = canonical_doubled(s.doubled());
    std::vector<std::array<int, 6>> reps{start};
    std::set<std::array<int, 6>> seen{start};
    for (std::size_t head = 0; head < reps.size(); ++head) {
        const auto cur = reps[head];
        for (const auto& m : aspect_maps()) {
            const SixJSymbol aspect = from_doubled(apply_map(m, cur));
            for (int kappa = 1; kappa <= 5; ++kappa) {
                const auto image = apply_regge(kappa, aspect);
                if (!image) continue;
                const auto can = canonical_doubled(image->doubled());
                if (seen.insert(can).second) reps.push_back(can);
            }
        }
    }
    OrbitReport out;
    std::sort(reps.begin() + 1, reps.end());
    out.representatives.reserve(reps.size());
    for (const auto& d : reps) out.representatives.push_back(from_doubled(d));
    out.closure_size = 24 * static_cast<std::int64_t>(reps.size());
    out.cls = class_from_rep_count(reps.size(), s);
    return out;
}

PartitionClass classify(const SixJSymbol& s, Mode mode) {
    if (!is_valid(s, mode))
        throw std::domain_error("classify of an invalid symbol " + to_string(s));
    if (mode == Mode::super && parity_of(s) == Parity::beta) {
        const BetaLabels b = beta_decomposition(s);
        const bool stays = b.qbar == b.qbar_prime || b.p == b.p_prime || b.pbar == b.pbar_prime;
        return stays ? PartitionClass::S0 : PartitionClass::S1;
    }
    const TriangleQuad tq = triangles(s);
    const int pmul = max_multiplicity(tq.p_doubled());
    const int qmul = max_multiplicity(tq.q_doubled());
    if (qmul == 3 || pmul >= 3) return PartitionClass::S0;
    if (qmul == 2) return pmul == 1 ? PartitionClass::S2 : PartitionClass::S1;
    return pmul == 1 ? PartitionClass::S5 : PartitionClass::S2;
}

PartitionClass classify_oracle(const SixJSymbol& s, Mode mode) { return regge_star(s, mode).cls; }

std::string report_line(const OrbitReport& report) {
    std::string out;
    for (int v : report.representatives.front().doubled()) {
        out += std::to_string(v);
        out += ' ';
    }
    out += to_string(report.cls);
    out += ' ';
    out += std::to_string(report.closure_size);
    out += ' ';
    out += std::to_string(report.representatives.size());
    return out;
}

} // namespace regge6j
