#include "subpair/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

namespace subpair {

bool is_valid_endo(const LambdaModule& B, const ModMatrix& M) {
    const RingSpec& R = B.ring();
    if (int(M.size()) != B.rank()) return false;
    for (int i = 0; i < B.rank(); ++i) {
        if (int(M[i].size()) != B.rank()) return false;
        for (int j = 0; j < B.rank(); ++j) {
            i64 c = M[i][j];
            if (c < 0 || c >= R.pow_p(B.part(i))) return false;
            if (c != 0 && R.val(c) < B.part(i) - B.part(j)) return false;
        }
    }
    return true;
}

bool is_automorphism(const LambdaModule& B, const ModMatrix& M) {
    if (!is_valid_endo(B, M)) return false;
    std::vector<LambdaModule::Elem> cols;
    for (int j = 0; j < B.rank(); ++j) {
        LambdaModule::Elem v(B.rank(), 0);
        for (int i = 0; i < B.rank(); ++i) v[i] = M[i][j];
        cols.push_back(std::move(v));
    }
    // Surjective endomorphisms of a finite module are automorphisms.
    return Submodule::span(B, cols).length() == B.length();
}

ModMatrix compose_endo(const LambdaModule& B, const ModMatrix& A, const ModMatrix& C) {
    const RingSpec& R = B.ring();
    int r = B.rank();
    ModMatrix out(r, std::vector<i64>(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            i64 s = 0;
            for (int k = 0; k < r; ++k) s = R.add(s, R.mul(A[i][k], C[k][j]));
            out[i][j] = R.mod_ppow(s, B.part(i));
        }
    return out;
}

Submodule apply_endo(const LambdaModule& B, const ModMatrix& M, const Submodule& A) {
    const RingSpec& R = B.ring();
    require(A.module() == B, "submodule of a different module");
    std::vector<LambdaModule::Elem> imgs;
    for (const LambdaModule::Elem& g : A.gens()) {
        LambdaModule::Elem v(B.rank(), 0);
        for (int i = 0; i < B.rank(); ++i) {
            i64 s = 0;
            for (int j = 0; j < B.rank(); ++j) s = R.add(s, R.mul(M[i][j], g[j]));
            v[i] = R.mod_ppow(s, B.part(i));
        }
        imgs.push_back(std::move(v));
    }
    return Submodule::span(B, imgs);
}

std::vector<ModMatrix> all_automorphisms(const LambdaModule& B, i64 cap) {
    const RingSpec& R = B.ring();
    int r = B.rank();
    std::vector<i64> sizes;
    i64 total = 1;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            i64 s = R.pow_p(std::min(B.part(i), B.part(j)));
            require(total <= cap / s, "automorphism enumeration cap exceeded");
            total *= s;
            sizes.push_back(s);
        }
    std::vector<i64> digit(sizes.size(), 0);
    std::vector<ModMatrix> out;
    while (true) {
        ModMatrix M(r, std::vector<i64>(r, 0));
        for (int i = 0, c = 0; i < r; ++i)
            for (int j = 0; j < r; ++j, ++c)
                M[i][j] = R.mul_ppow(digit[c], std::max(0, B.part(i) - B.part(j)));
        if (is_automorphism(B, M)) out.push_back(std::move(M));
        size_t k = 0;
        while (k < digit.size() && ++digit[k] == sizes[k]) digit[k++] = 0;
        if (k == digit.size()) break;
    }
    return out;
}

std::vector<ModMatrix> automorphism_generators(const LambdaModule& B) {
    const RingSpec& R = B.ring();
    int r = B.rank();
    ModMatrix id(r, std::vector<i64>(r, 0));
    for (int i = 0; i < r; ++i) id[i][i] = 1;
    std::vector<ModMatrix> gens;
    for (int j = 0; j < r; ++j)
        for (i64 u = 2; u < R.pow_p(B.part(j)); ++u) {
            if (u % R.p() == 0) continue;
            ModMatrix M = id;
            M[j][j] = u;
            gens.push_back(std::move(M));
        }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (i == j) continue;
            int shift = std::max(0, B.part(i) - B.part(j));
            for (i64 d = 1; d < R.pow_p(std::min(B.part(i), B.part(j))); ++d) {
                ModMatrix M = id;
                M[i][j] = R.mul_ppow(d, shift);
                gens.push_back(std::move(M));
            }
        }
    return gens;
}

ModMatrix random_automorphism(const LambdaModule& B, std::mt19937_64& rng) {
    const RingSpec& R = B.ring();
    int r = B.rank();
    for (int attempt = 0; attempt < 1000; ++attempt) {
        ModMatrix M(r, std::vector<i64>(r, 0));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                std::uniform_int_distribution<i64> d(
                    0, R.pow_p(std::min(B.part(i), B.part(j))) - 1);
                M[i][j] = R.mul_ppow(d(rng), std::max(0, B.part(i) - B.part(j)));
            }
        if (is_automorphism(B, M)) return M;
    }
    ensure(false, "random invertible matrices should be plentiful");
    return ModMatrix{};
}

std::vector<Submodule> enumerate_submodules(const LambdaModule& B, int m, i64 cap) {
    const RingSpec& R = B.ring();
    require(m >= 0, "negative annihilator bound");
    require(cap >= 1, "cap must be positive");
    i64 card = 1;
    for (int l : B.parts())
        for (int e = 0; e < l; ++e) {
            require(card <= cap / R.p(), "module cardinality cap exceeded");
            card *= R.p();
        }

    // Elements killed by p^m, coordinatewise odometer.
    std::vector<int> free_digits(B.rank());
    for (int j = 0; j < B.rank(); ++j) free_digits[j] = std::min(m, B.part(j));
    std::vector<LambdaModule::Elem> socm;
    std::vector<i64> digit(B.rank(), 0);
    while (true) {
        LambdaModule::Elem v(B.rank(), 0);
        for (int j = 0; j < B.rank(); ++j)
            v[j] = R.mul_ppow(digit[j], B.part(j) - free_digits[j]);
        socm.push_back(std::move(v));
        int k = 0;
        while (k < B.rank() && ++digit[k] == R.pow_p(free_digits[k])) digit[k++] = 0;
        if (k == B.rank()) break;
    }

    // Closure under adding one more generator reaches every submodule.
    std::map<std::string, int> seen;
    std::vector<Submodule> out{Submodule::zero(B)};
    seen[out[0].key()] = 0;
    for (size_t qi = 0; qi < out.size(); ++qi)
        for (const LambdaModule::Elem& v : socm) {
            if (out[qi].contains(v)) continue;
            std::vector<LambdaModule::Elem> gs = out[qi].gens();
            gs.push_back(v);
            Submodule nxt = Submodule::span(B, gs);
            auto [it, fresh] = seen.emplace(nxt.key(), int(out.size()));
            (void)it;
            if (fresh) out.push_back(std::move(nxt));
        }
    std::sort(out.begin(), out.end(),
              [](const Submodule& a, const Submodule& b) { return a.key() < b.key(); });
    return out;
}

std::vector<Submodule> automorphism_orbit(const LambdaModule& B, const Submodule& A) {
    require(A.module() == B, "submodule of a different module");
    std::vector<ModMatrix> gens = automorphism_generators(B);
    std::map<std::string, int> seen;
    std::vector<Submodule> orbit{A};
    seen[A.key()] = 0;
    for (size_t qi = 0; qi < orbit.size(); ++qi)
        for (const ModMatrix& M : gens) {
            Submodule img = apply_endo(B, M, orbit[qi]);
            auto [it, fresh] = seen.emplace(img.key(), int(orbit.size()));
            (void)it;
            if (fresh) orbit.push_back(std::move(img));
        }
    return orbit;
}

bool is_isomorphic_bruteforce(const Pair& x, const Pair& y) {
    require(x.ring() == y.ring(), "pairs over different rings");
    if (x.B().parts() != y.B().parts()) return false;
    if (x.A().type() != y.A().type()) return false;
    std::string want = y.A().key();
    for (const Submodule& s : automorphism_orbit(x.B(), x.A()))
        if (s.key() == want) return true;
    return false;
}

namespace {

void partitions_rec(int largest, int parts_left, int len_left, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (!cur.empty()) out.push_back(cur);
    if (parts_left == 0) return;
    for (int l = largest; l >= 1; --l) {
        if (len_left >= 0 && l > len_left) continue;
        cur.push_back(l);
        partitions_rec(l, parts_left - 1, len_left >= 0 ? len_left - l : -1, cur, out);
        cur.pop_back();
    }
}

std::string seq_show(const std::vector<int>& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

}  // namespace

std::vector<std::vector<int>> bounded_partitions(int n, const CensusOptions& opt) {
    require(opt.max_parts >= 1, "at least one part required");
    int maxpart = opt.max_part > 0 ? std::min(opt.max_part, n) : n;
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(maxpart, opt.max_parts, opt.max_length > 0 ? opt.max_length : -1,
                   cur, out);
    std::sort(out.begin(), out.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  int sa = 0, sb = 0;
                  for (int x : a) sa += x;
                  for (int x : b) sb += x;
                  if (sa != sb) return sa < sb;
                  return a > b;  // larger leading parts first within a length
              });
    return out;
}

Census verify_census(const RingSpec& R, const CensusOptions& opt) {
    require(0 <= opt.m && opt.m <= 2, "census bound must lie in [0, 2]");
    Census census{R, opt, 0, {}, 0, {}};
    auto fail = [&](const std::string& msg) {
        census.failures++;
        census.notes.push_back(msg);
    };
    std::map<std::string, std::string> hseq_owner;  // height sequence -> class

    for (const std::vector<int>& parts : bounded_partitions(R.n(), opt)) {
        LambdaModule B(R, parts);
        std::vector<Submodule> subs = enumerate_submodules(B, opt.m, opt.max_cardinality);
        census.total_submodules += i64(subs.size());

        std::map<std::string, int> index;
        for (size_t i = 0; i < subs.size(); ++i) index[subs[i].key()] = int(i);
        std::vector<ModMatrix> gens = automorphism_generators(B);
        std::vector<int> orbit_of(subs.size(), -1);

        std::vector<PairLabel> expected;
        for (const PairLabel& l : all_pair_labels(R.n()))
            if (l.partition_parts() == parts) expected.push_back(l);
        std::vector<PairLabel> found;
        std::map<std::string, int> report_owner;

        for (size_t i = 0; i < subs.size(); ++i) {
            if (orbit_of[i] >= 0) continue;
            int id = int(census.classes.size());
            std::vector<int> members{int(i)};
            orbit_of[i] = id;
            for (size_t qi = 0; qi < members.size(); ++qi)
                for (const ModMatrix& M : gens) {
                    Submodule img = apply_endo(B, M, subs[members[qi]]);
                    int j = index.at(img.key());
                    if (orbit_of[j] < 0) {
                        orbit_of[j] = id;
                        members.push_back(j);
                    }
                }

            DecompReport report = classify_s2(Pair(B, subs[i], 2));
            for (size_t qi = 1; qi < members.size(); ++qi)
                if (classify_s2(Pair(B, subs[members[qi]], 2)) != report) {
                    fail("shape " + seq_show(parts) + ": classifier not constant on the orbit of " +
                         subs[i].key());
                    break;
                }

            auto [it, fresh] = report_owner.emplace(report.show(), id);
            (void)it;
            if (!fresh)
                fail("shape " + seq_show(parts) + ": two orbits share the report " +
                     report.show());

            if (report.total() == 1) {
                PairLabel label = report.labels.begin()->first;
                found.push_back(label);
                const Submodule& A = subs[i];
                int min_gens = A.length() - scalar_image(A, 1).length();
                if (min_gens > 1)
                    fail("indecomposable " + label.show() + " has a non-cyclic subgroup " +
                         A.key());
                else if (!A.is_zero()) {
                    LambdaModule::Elem g;
                    bool got = false;
                    for (const LambdaModule::Elem& cand : A.gens())
                        if (Submodule::span(B, {cand}) == A) {
                            g = cand;
                            got = true;
                            break;
                        }
                    if (!got)
                        fail("no cyclic generator found for " + label.show());
                    else {
                        std::vector<int> hs = height_sequence(B, g);
                        if (hs != label.expected_height_seq())
                            fail("height sequence " + seq_show(hs) + " of " + label.show() +
                                 " differs from " + seq_show(label.expected_height_seq()));
                        auto [hit, hfresh] = hseq_owner.emplace(seq_show(hs), label.show());
                        if (!hfresh && hit->second != label.show())
                            fail("height sequence " + seq_show(hs) + " shared by " +
                                 hit->second + " and " + label.show());
                    }
                }
            }
            census.classes.push_back(
                CensusEntry{parts, subs[i], i64(members.size()), report});
        }

        std::sort(expected.begin(), expected.end());
        std::sort(found.begin(), found.end());
        if (expected != found) {
            std::string e, f;
            for (const PairLabel& l : expected) e += l.show() + " ";
            for (const PairLabel& l : found) f += l.show() + " ";
            fail("shape " + seq_show(parts) + ": indecomposables {" + f +
                 "} differ from the label list {" + e + "}");
        }
    }
    return census;
}

i64 cardinality_cap_from_env(i64 fallback) {
    const char* s = std::getenv("SUBPAIR_MAX_CARDINALITY");
    if (s == nullptr || *s == '\0') return fallback;
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    require(end != nullptr && *end == '\0' && v >= 2,
            "SUBPAIR_MAX_CARDINALITY must be an integer of at least 2");
    return i64(v);
}

}  // namespace subpair
