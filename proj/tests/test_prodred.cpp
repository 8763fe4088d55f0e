#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qvertex/prodred.hpp"
#include "test_util.hpp"

using namespace qvertex;
using namespace qvertex::testing;

namespace {

SignedExponentMultiset ms(std::initializer_list<std::pair<const int, int>> e) { return SignedExponentMultiset(e); }

// sum_{i,j <= n} (t^(mu1_i - mu2_j + j - i) - t^(j - i)) kept inside |e| <= window.
// Boundary terms of the truncated sum sit at |e| >= n - |mu1| - |mu2| - l1 - l2.
LaurentPoly truncated_double_sum(const Partition& a, const Partition& b, int n, int window) {
    std::map<int, int> acc;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            ++acc[a.part(i - 1) - b.part(j - 1) + j - i];
            --acc[j - i];
        }
    LaurentPoly p;
    for (auto [e, c] : acc)
        if (c != 0 && std::abs(e) <= window) p += tpow(e, c);
    return p;
}

int total_count(const SignedExponentMultiset& m) {
    int n = 0;
    for (auto [e, c] : m) n += std::abs(c);
    return n;
}

}  // namespace

TEST_CASE("single multiset examples") {
    CHECK(single_multiset(Partition{}).empty());
    CHECK(single_multiset(Partition{1}) == ms({{1, -1}}));
    CHECK(single_multiset(Partition{2, 1}) == ms({{3, -1}, {1, -2}}));
    CHECK(to_string(single_multiset(Partition{2, 1})) == "[(3,-1),(1,-2)]");
}

TEST_CASE("pair multiset examples") {
    CHECK(pair_multiset(Partition{}, Partition{}).empty());
    CHECK(pair_multiset(Partition{1}, Partition{}) == ms({{0, -1}}));
    CHECK(pair_multiset(Partition{1}, Partition{1}) == ms({{1, -1}, {-1, -1}}));
}

TEST_CASE("pair multiset matches truncated double sums") {
    for (const auto& a : enumerate(5))
        for (const auto& b : enumerate(5)) {
            if (a.weight() + b.weight() > 7) continue;
            int bound = a.weight() + b.weight() + a.length() + b.length() + 1;
            int n = 2 * bound + 5;
            LaurentPoly near = truncated_double_sum(a, b, n, bound + 2);
            LaurentPoly far = truncated_double_sum(a, b, n + 5, bound + 2);
            REQUIRE(near == far);
            CHECK_MESSAGE(as_poly(pair_multiset(a, b)) == near, to_string(a) << " | " << to_string(b));
        }
}

TEST_CASE("normal form: all negative, total count |mu1| + |mu2|") {
    for (const auto& a : enumerate(8))
        for (const auto& b : enumerate(8 - a.weight())) {
            auto m = pair_multiset(a, b);
            for (auto [e, c] : m) CHECK(c < 0);
            CHECK(total_count(m) == a.weight() + b.weight());
        }
}

TEST_CASE("specializations: contents against the empty partition, hooks against itself") {
    for (const auto& mu : enumerate(8)) {
        SignedExponentMultiset contents, hooks;
        for (int c : mu.contents()) --contents[c];
        for (int h : mu.hooks()) {
            --hooks[h];
            --hooks[-h];
        }
        CHECK(pair_multiset(mu, Partition{}) == contents);
        CHECK(pair_multiset(mu, mu) == hooks);
    }
}

TEST_CASE("derivative identity on the uncancelled sums") {
    for (const auto& a : enumerate(6))
        for (const auto& b : enumerate(6)) {
            PairSums s = pair_sums(a, b);
            long total = 0;
            for (int m : s.plus) total += m;
            for (int m : s.minus) total -= m;
            CHECK(2 * total == b.kappa() - a.kappa());
        }
}

TEST_CASE("product_over examples") {
    CHECK(lf_equal(product_over(SignedExponentMultiset{}, FactorKind::bracket()), 1));
    CHECK(lf_equal(product_over(ms({{1, -1}}), FactorKind::bracket()), LaurentFraction(1) / bracket1()));
    LaurentPoly Qq = LaurentPoly::monomial({2, 2, 0, 0});
    LaurentPoly Qqinv = LaurentPoly::monomial({-2, 2, 0, 0});
    CHECK(lf_equal(product_over(ms({{1, -1}, {-1, -1}}), FactorKind::one_minus_Qq()),
                   LaurentFraction(1) / ((LaurentPoly(1) - Qq) * (LaurentPoly(1) - Qqinv))));
    CHECK_THROWS_WITH(product_over(ms({{0, -1}}), FactorKind::bracket()), "factor vanishes at zero");
    // sinh_1(0) = (s^-1 - s)/2
    LaurentPoly sinh0 = (LaurentPoly::var_power(var::s, -1) - LaurentPoly::var_power(var::s, 1)) * Rat(1, 2);
    CHECK(lf_equal(product_over(ms({{0, -1}}), FactorKind::sinh(1)), LaurentFraction(1) / sinh0));
}

TEST_CASE("factor powers agree with direct polynomials") {
    std::vector<FactorKind> kinds = {FactorKind::bracket(), FactorKind::one_minus_Qq(), FactorKind::sinh(1),
                                     FactorKind::sinh(2), FactorKind::sinh(Exponent{0, 1, 1, 0})};
    for (const auto& f : kinds)
        for (int m = -3; m <= 3; ++m) {
            if (m == 0 && f.tag == FactorKind::Tag::bracket) continue;
            Exponent tm{m, 0, 0, 0};
            LaurentPoly direct;
            switch (f.tag) {
                case FactorKind::Tag::bracket: direct = tpow(m) - tpow(-m); break;
                case FactorKind::Tag::one_minus_Qq: direct = LaurentPoly(1) - LaurentPoly::monomial(2 * f.shift + 2 * tm); break;
                case FactorKind::Tag::sinh_shift:
                    direct = (LaurentPoly::monomial((-1) * (f.shift + tm)) - LaurentPoly::monomial(f.shift + tm)) * Rat(1, 2);
                    break;
            }
            for (int k = -3; k <= 3; ++k) {
                LaurentFraction expect = k >= 0 ? LaurentFraction(direct.pow(k)) : LaurentFraction(1) / LaurentFraction(direct.pow(-k));
                CHECK(lf_equal(factor_power(f, m, k), expect));
            }
        }
}

TEST_CASE("product_over distributes and agrees with the uncancelled product") {
    for (const auto& a : enumerate(4))
        for (const auto& b : enumerate(4)) {
            auto m1 = pair_multiset(a, b), m2 = pair_multiset(b, a);
            SignedExponentMultiset sum = m1;
            for (auto [e, c] : m2) sum[e] += c;
            for (auto it = sum.begin(); it != sum.end();) it = it->second == 0 ? sum.erase(it) : std::next(it);
            for (const auto& f : {FactorKind::one_minus_Qq(), FactorKind::sinh(1)}) {
                CHECK(lf_equal(product_over(sum, f), product_over(m1, f) * product_over(m2, f)));
                CHECK(lf_equal(product_over(pair_sums(a, b), f), product_over(m1, f)));
            }
        }
}

TEST_CASE("diagonal block ratio") {
    CHECK(lf_equal(diag_block_ratio(Partition{}, FactorKind::bracket()), 1));
    LaurentPoly b1 = bracket1(), b2 = tpow(2) - tpow(-2);
    // f(h) f(-h) = -[h]^2 for the odd bracket.
    CHECK(lf_equal(diag_block_ratio(Partition{1}, FactorKind::bracket()), LaurentFraction(-1) / (b1 * b1)));
    CHECK(lf_equal(diag_block_ratio(Partition{2}, FactorKind::bracket()), LaurentFraction(1) / (b1 * b1 * b2 * b2)));
    // Agrees with the (i,j) product reduced through the pair multiset of mu with itself.
    for (const auto& mu : enumerate(6))
        for (const auto& f : {FactorKind::bracket(), FactorKind::sinh(0), FactorKind::sinh(1), FactorKind::one_minus_Qq()})
            CHECK(lf_equal(diag_block_ratio(mu, f), product_over(pair_multiset(mu, mu), f)));
}
