#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "qvertex/laurent_poly.hpp"
#include "qvertex/partition.hpp"

using namespace qvertex;

namespace {

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// Hook lengths counted box by box from arm and leg, independent of conjugate().
std::vector<int> hooks_by_walking(const Partition& mu) {
    std::vector<int> out;
    for (int i = 0; i < mu.length(); ++i)
        for (int j = 0; j < mu.part(i); ++j) {
            int arm = mu.part(i) - j - 1, leg = 0;
            while (i + leg + 1 < mu.length() && mu.part(i + leg + 1) > j) ++leg;
            out.push_back(arm + leg + 1);
        }
    return out;
}

LaurentPoly tp(int e) { return LaurentPoly::var_power(var::t, e); }

int partition_count(int n, int max_part) {
    if (n == 0) return 1;
    int c = 0;
    for (int p = 1; p <= std::min(n, max_part); ++p) c += partition_count(n - p, p);
    return c;
}

}  // namespace

TEST_CASE("conjugate") {
    CHECK(Partition{}.conjugate() == Partition{});
    CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    CHECK(Partition{2, 1}.conjugate() == Partition{2, 1});
}

TEST_CASE("kappa") {
    CHECK(Partition{}.kappa() == 0);
    CHECK(Partition{3}.kappa() == 6);
    CHECK(Partition{1, 1, 1}.kappa() == -6);
    CHECK(Partition{2, 1}.kappa() == 0);
}

TEST_CASE("hooks and contents") {
    CHECK(Partition{}.hooks().empty());
    CHECK(sorted(Partition{2, 1}.hooks()) == std::vector<int>{1, 1, 3});
    CHECK(sorted(Partition{2, 2}.hooks()) == std::vector<int>{1, 2, 2, 3});
    CHECK(Partition{1}.contents() == std::vector<int>{0});
    CHECK(sorted(Partition{2, 2}.contents()) == std::vector<int>{-1, 0, 0, 1});
    CHECK(Partition{3}.contents() == std::vector<int>{0, 1, 2});
}

TEST_CASE("enumeration") {
    CHECK(enumerate(0) == std::vector<Partition>{Partition{}});
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(8).size() == 22);
    CHECK(partitions_of(4).front() == Partition{4});
    CHECK(partitions_of(4).back() == Partition{1, 1, 1, 1});
    for (int n = 0; n <= 12; ++n) CHECK(static_cast<int>(partitions_of(n).size()) == partition_count(n, n));
    auto all = enumerate(6);
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
}

TEST_CASE("containment") {
    CHECK(Partition{2, 1}.contains(Partition{1}));
    CHECK_FALSE(Partition{2, 1}.contains(Partition{2, 2}));
    for (const auto& mu : enumerate(6)) CHECK(mu.contains(mu));
    auto subs = subpartitions(Partition{3, 2});
    CHECK(subs.size() == 9);
    for (const auto& s : subs) CHECK(Partition({3, 2}).contains(s));
}

TEST_CASE("parsing") {
    CHECK(Partition::parse("3,1") == Partition{3, 1});
    CHECK(Partition::parse("") == Partition{});
    CHECK(Partition::parse("0") == Partition{});
    CHECK_THROWS(Partition::parse("1,3"));
    CHECK_THROWS(Partition::parse("a"));
    CHECK(to_string(Partition{2, 1}) == "2,1");
}

TEST_CASE("statistics over all small partitions") {
    for (const auto& mu : enumerate(12)) {
        CHECK(mu.conjugate().conjugate() == mu);
        CHECK(mu.conjugate().kappa() == -mu.kappa());
        CHECK(mu.kappa() % 2 == 0);
        auto c = mu.contents();
        int csum = 0;
        for (int x : c) csum += x;
        CHECK(2 * csum == mu.kappa());
        auto h = mu.hooks();
        CHECK(sorted(h) == sorted(hooks_by_walking(mu)));
        int hsum = 0, sq = 0;
        for (int x : h) hsum += x;
        for (int p : mu.parts()) sq += p * p;
        CHECK(hsum == sq - mu.kappa() / 2);
        if (mu.weight() <= 10) CHECK(sorted(h) == sorted(mu.conjugate().hooks()));
    }
}

TEST_CASE("hook and pair-difference generating identity") {
    for (const auto& mu : enumerate(8)) {
        int l = mu.length();
        for (int n = std::max(l, 1); n <= l + 3; ++n) {
            LaurentPoly lhs;
            for (int h : mu.hooks()) lhs += tp(h);
            for (int i = 1; i <= l; ++i)
                for (int j = i + 1; j <= n; ++j) lhs += tp(mu.part(i - 1) - mu.part(j - 1) + j - i);
            LaurentPoly rhs;
            for (int i = 1; i <= l; ++i)
                for (int j = 1; j <= mu.part(i - 1) - i + n; ++j) rhs += tp(j);
            CHECK(lhs == rhs);
        }
    }
}
