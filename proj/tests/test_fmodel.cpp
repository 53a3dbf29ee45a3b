#include "doctest.h"

#include "es/fmodel.hpp"
#include "es/matrices.hpp"

using namespace es;

TEST_CASE("graded dimensions follow the two recursions") {
    for (int n = 5; n <= 12; ++n) {
        CHECK(fmodel_dim(n, FMode::N1) ==
              fmodel_dim(n - 2, FMode::N1) + fmodel_dim(n - 3, FMode::N1));
        CHECK(fmodel_dim(n, FMode::N2) ==
              fmodel_dim(n - 1, FMode::N2) + fmodel_dim(n - 2, FMode::N2));
    }
    // the word-side enumerators count the same dimensions
    for (int n = 2; n <= 14; ++n) CHECK(fmodel_dim(n, FMode::N1) == dim_count(n));
}

TEST_CASE("derivations strip a leading generator") {
    FWord w;
    w.gens = {3, 5};
    CHECK(f_derivation(3, w) == LinComb<FWord>(FWord{{5}, 0}));
    CHECK(f_derivation(5, w).zero());
    w.e2 = 2;
    auto d = f_derivation(3, w);
    REQUIRE(d.size() == 1);
    CHECK(d.terms.begin()->first.e2 == 2);
}

TEST_CASE("derivations satisfy Leibniz on the shuffle product") {
    for (int wx = 1; wx <= 5; ++wx)
        for (int wy = 1; wx + wy <= 8; ++wy)
            for (auto& x : enumerate_fwords(wx, FMode::N2))
                for (auto& y : enumerate_fwords(wy, FMode::N2)) {
                    auto prod = f_shuffle(x, y);
                    for (int m = 1; m <= wx + wy; m += 2) {
                        LinComb<FWord> lhs = f_derivation(m, prod);
                        LinComb<FWord> rhs;
                        for (auto& [t, c] : f_derivation(m, x).terms)
                            rhs.add(f_shuffle(t, y), c);
                        for (auto& [t, c] : f_derivation(m, y).terms)
                            rhs.add(f_shuffle(x, t), c);
                        CHECK(lhs == rhs);
                    }
                }
}

TEST_CASE("joint kernel is one-dimensional in each weight") {
    for (int n = 2; n <= 12; ++n)
        for (FMode mode : {FMode::N1, FMode::N2}) {
            auto rep = kernel_check(n, mode);
            CHECK(rep.dim == fmodel_dim(n, mode));
            REQUIRE(rep.kernel_dim == (long)rep.kernel_basis.size());
            if (n % 2 == 0) {
                // only the pure polynomial part survives
                REQUIRE(rep.kernel_dim == 1);
                CHECK(rep.kernel_basis[0].gens.empty());
                CHECK(rep.kernel_basis[0].e2 == n / 2);
            } else if (mode == FMode::N2 || n >= 3) {
                // a single new generator
                REQUIRE(rep.kernel_dim == 1);
                CHECK(rep.kernel_basis[0].gens == std::vector<int>{n});
                CHECK(rep.kernel_basis[0].e2 == 0);
            }
        }
}
