#include <doctest.h>

#include "plethyon/quotient_a.hpp"

using namespace plethyon;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

}  // namespace

TEST_CASE("worked 3-quotient of (6,6,4,4,4,3,2,1)") {
    const Partition mu = P({6, 6, 4, 4, 4, 3, 2, 1});
    const QuotientA q = ell_quotient_a(mu, 3, 8);
    REQUIRE(q.sign == -1);
    REQUIRE(q.quotient.size() == 3);
    CHECK(q.quotient[0] == P({1, 1}));
    CHECK(q.quotient[1] == P({2, 2, 1}));
    CHECK(q.quotient[2] == P({2, 1}));
    long long total = 0;
    for (const Partition& c : q.quotient) total += c.weight();
    CHECK(3 * total == mu.weight());
}

TEST_CASE("trivial quotient at ell = 1") {
    for (int w = 0; w <= 6; ++w)
        for (const Partition& mu : enumerate_partitions(w, w)) {
            const QuotientA q = ell_quotient_a(mu, 1, mu.length() + 2);
            CHECK(q.sign == 1);
            REQUIRE(q.quotient.size() == 1);
            CHECK(q.quotient[0] == mu);
        }
}

TEST_CASE("2-quotient of (1,1) drives the square power sum") {
    const QuotientA q = ell_quotient_a(P({1, 1}), 2, 2);
    CHECK(q.sign == -1);
    REQUIRE(q.quotient.size() == 2);
    CHECK(q.quotient[0] == Partition{});
    CHECK(q.quotient[1] == P({1}));

    // (1) at n = 2 has unbalanced residue classes.
    CHECK(ell_quotient_a(P({1}), 2, 2).sign == 0);
}

TEST_CASE("rejects bad input") {
    CHECK_THROWS(ell_quotient_a(P({1}), 0, 3));
    CHECK_THROWS(ell_quotient_a(P({2, 1}), 2, 1));
}

TEST_CASE("pad stability") {
    CHECK(pad_stability_check(P({6, 6, 4, 4, 4, 3, 2, 1}), 3, 8));
    CHECK(pad_stability_check(P({1}), 2, 2));
    for (int w = 0; w <= 8; ++w)
        for (const Partition& mu : enumerate_partitions(w, w))
            for (int ell = 1; ell <= 4; ++ell)
                for (int n = mu.length(); n <= 12; ++n)
                    CHECK(pad_stability_check(mu, ell, std::max(n, 1)));
}

TEST_CASE("stabilized gl plethysm coefficients") {
    CHECK(a_gl(P({1}), P({2}), 2) == 1);
    CHECK(a_gl(P({1}), P({1, 1}), 2) == -1);
    CHECK(a_gl(P({1}), P({1}), 2) == 0);

    Expansion p2 = psi_gl(P({1}), 2);
    CHECK(p2.at(P({2})) == 1);
    CHECK(p2.at(P({1, 1})) == -1);
    CHECK(p2.size() == 2);

    Expansion p3 = psi_gl(P({1}), 3);
    CHECK(p3.at(P({3})) == 1);
    CHECK(p3.at(P({2, 1})) == -1);
    CHECK(p3.at(P({1, 1, 1})) == 1);
    CHECK(p3.size() == 3);

    Expansion trivial = psi_gl(Partition{}, 4);
    CHECK(trivial.at(Partition{}) == 1);
    CHECK(trivial.size() == 1);
}

TEST_CASE("quotient weight identity whenever the sign is nonzero") {
    for (int w = 0; w <= 10; ++w)
        for (const Partition& mu : enumerate_partitions(w, w))
            for (int ell = 2; ell <= 4; ++ell) {
                const QuotientA q = ell_quotient_a(mu, ell, mu.length() + ell);
                if (q.sign == 0) continue;
                long long total = 0;
                for (const Partition& c : q.quotient) total += c.weight();
                CHECK(static_cast<long long>(ell) * total == mu.weight());
            }
}
