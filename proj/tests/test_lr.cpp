#include <doctest.h>

#include "plethyon/lr.hpp"

using namespace plethyon;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

}  // namespace

TEST_CASE("pieri and classic coefficients") {
    CHECK(lr_coefficient(P({1}), P({1}), P({2})) == 1);
    CHECK(lr_coefficient(P({1}), P({1}), P({1, 1})) == 1);
    CHECK(lr_coefficient(P({2, 1}), P({2, 1}), P({3, 2, 1})) == 2);
    CHECK(lr_coefficient(P({2, 1}), P({2, 1}), P({4, 2})) == 1);
    CHECK(lr_coefficient(P({1}), P({1}), P({3})) == 0);       // weight mismatch
    CHECK(lr_coefficient(P({2}), P({1}), P({1, 1, 1})) == 0); // containment fails
}

TEST_CASE("schur products") {
    Expansion e = schur_product(P({1}), P({1}));
    CHECK(e.at(P({2})) == 1);
    CHECK(e.at(P({1, 1})) == 1);
    CHECK(e.size() == 2);

    Expansion id = schur_product(Partition{}, P({3, 1}));
    CHECK(id.at(P({3, 1})) == 1);
    CHECK(id.size() == 1);

    Expansion f = schur_product(P({2}), P({1, 1}));
    CHECK(f.at(P({3, 1})) == 1);
    CHECK(f.at(P({2, 1, 1})) == 1);
    CHECK(f.size() == 2);
}

TEST_CASE("symmetry and conjugation invariance up to weight 8") {
    for (int wl = 0; wl <= 4; ++wl)
        for (const Partition& lam : enumerate_partitions(wl, wl))
            for (int wm = 0; wm <= 8 - wl; ++wm)
                for (const Partition& mu : enumerate_partitions(wm, wm)) {
                    const Expansion ab = schur_product(lam, mu);
                    CHECK(ab == schur_product(mu, lam));
                    const Expansion conj = schur_product(lam.conjugate(), mu.conjugate());
                    for (const auto& [nu, c] : ab.entries())
                        CHECK(conj.at(nu.conjugate()) == c);
                }
}

TEST_CASE("multi product coefficients") {
    CHECK(multi_lr({P({1}), P({1}), P({1})}, P({3})) == 1);
    CHECK(multi_lr({P({1}), P({1}), P({1})}, P({2, 1})) == 2);
    CHECK(multi_lr({P({2, 1})}, P({2, 1})) == 1);
    CHECK(multi_lr({P({2, 1})}, P({3})) == 0);
    CHECK(multi_lr({P({1}), P({1})}, P({2})) == lr_coefficient(P({1}), P({1}), P({2})));
}

TEST_CASE("stable tensor coefficients") {
    CHECK(stable_tensor_coefficient(P({1}), P({1}), Partition{}) == 1);
    CHECK(stable_tensor_coefficient(P({1}), P({1}), P({2})) == 1);
    CHECK(stable_tensor_coefficient(P({1}), P({1}), P({1, 1})) == 1);
    CHECK(stable_tensor_coefficient(P({1}), P({1}), P({1})) == 0);  // parity
    for (int wl = 0; wl <= 3; ++wl)
        for (const Partition& lam : enumerate_partitions(wl, wl))
            for (int wm = 0; wm <= 3; ++wm)
                for (const Partition& mu : enumerate_partitions(wm, wm))
                    for (int wn = 0; wn <= wl + wm; ++wn)
                        for (const Partition& nu : enumerate_partitions(wn, wn)) {
                            const long long d = stable_tensor_coefficient(lam, mu, nu);
                            CHECK(d == stable_tensor_coefficient(mu, lam, nu));
                            CHECK(d == stable_tensor_coefficient(lam.conjugate(), mu.conjugate(),
                                                                 nu.conjugate()));
                        }
}

TEST_CASE("littlewood branching coefficients") {
    CHECK(littlewood_b(P({2}), Partition{}, Family::so) == 1);
    CHECK(littlewood_b(P({2}), Partition{}, Family::sp) == 0);
    CHECK(littlewood_b(P({1, 1}), Partition{}, Family::sp) == 1);
    CHECK(littlewood_b(P({1, 1}), Partition{}, Family::so) == 0);
    CHECK(littlewood_b(P({2, 1}), P({1}), Family::so) == 1);
    CHECK(littlewood_b(P({2, 1}), P({1}), Family::sp) == 1);
    CHECK_THROWS(littlewood_b(P({2}), Partition{}, Family::gl));
}

TEST_CASE("littlewood inverse coefficients") {
    CHECK(littlewood_r(P({3, 1}), P({3, 1}), Family::so) == 1);
    CHECK(littlewood_r(P({1, 1}), Partition{}, Family::sp) == 1);
    CHECK(littlewood_r(P({2}), Partition{}, Family::so) == 1);
    CHECK(littlewood_r(P({2}), Partition{}, Family::sp) == 0);
    CHECK(littlewood_r(P({1, 1}), Partition{}, Family::so) == 0);
    CHECK(littlewood_r(P({2}), P({1}), Family::so) == 0);  // parity
}

TEST_CASE("b and r are mutually inverse up to weight 6") {
    for (int wl = 0; wl <= 6; ++wl)
        for (const Partition& lam : enumerate_partitions(wl, wl))
            for (Family family : {Family::so, Family::sp})
                for (int wm = wl % 2; wm <= 6; wm += 2)
                    for (const Partition& mu : enumerate_partitions(wm, wm)) {
                        long long total = 0;
                        for (int wn = 0; wn <= wl; ++wn)
                            for (const Partition& nu : enumerate_partitions(wn, wn)) {
                                const long long r = littlewood_r(lam, nu, family);
                                if (!r) continue;
                                const long long b = littlewood_b(nu, mu, family);
                                if (!b) continue;
                                const long long sign = ((wl - wn) / 2) % 2 == 0 ? 1 : -1;
                                total += sign * r * b;
                            }
                        CHECK(total == (lam == mu ? 1 : 0));
                    }
}
