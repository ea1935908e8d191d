#pragma once

#include <functional>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "absorb/constructions.hpp"
#include "absorb/error.hpp"
#include "absorb/module.hpp"
#include "absorb/ring.hpp"

namespace fixtures {

/// Runs fn and checks that it throws absorb::Error of the given kind.
inline void expect_error(absorb::ErrorKind kind, const std::function<void()>& fn) {
    try {
        fn();
        ADD_FAILURE() << "expected " << absorb::to_string(kind) << ", nothing thrown";
    } catch (const absorb::Error& e) {
        EXPECT_EQ(e.kind(), kind) << e.what();
    }
}

inline std::vector<absorb::Index> indices(const std::vector<absorb::RingElt>& elts) {
    std::vector<absorb::Index> out;
    for (const auto& e : elts) out.push_back(e.index);
    return out;
}

/// (d) in the ring Z_n acting on itself.
inline absorb::Submodule ideal_of(const absorb::FiniteModule& self, long long d) {
    return absorb::cyclic_submodule(self, static_cast<absorb::Index>(d % self.order()));
}

/// A spread of small modules of every constructor kind, each with |M| <= 16.
inline std::vector<absorb::FiniteModule> small_modules() {
    using namespace absorb;
    std::vector<FiniteModule> out;
    for (long long n = 2; n <= 16; ++n) out.push_back(self_module(make_zmod(n)));
    for (long long d : {2, 3, 4, 6}) out.push_back(cyclic_module(make_zmod(12), d));
    out.push_back(z_product_module(2, 2));
    out.push_back(z_product_module(2, 4));
    out.push_back(z_product_module(3, 3));
    out.push_back(z_product_module(2, 6));
    out.push_back(z_product_module(4, 4));
    out.push_back(product_module_over_product_ring(self_module(make_zmod(2)),
                                                   self_module(make_zmod(3))));
    out.push_back(product_module_over_product_ring(self_module(make_zmod(3)),
                                                   self_module(make_zmod(3))));
    out.push_back(product_module_over_product_ring(self_module(make_zmod(2)),
                                                   self_module(make_zmod(4))));
    out.push_back(self_module(idealization_ring(make_zmod(2), self_module(make_zmod(2)))));
    out.push_back(self_module(idealization_ring(make_zmod(3), self_module(make_zmod(3)))));
    out.push_back(self_module(idealization_ring(make_zmod(4), self_module(make_zmod(4)))));
    {
        FiniteRing z6 = make_zmod(6);
        out.push_back(self_module(
            amalgamation_ring(z6, z6, identity_hom(z6), principal_ideal(z6, z6.element(3)))));
    }
    {
        FiniteModule z12 = self_module(make_zmod(12));
        out.push_back(quotient_module(z12, cyclic_submodule(z12, 4)).module);
    }
    {
        FiniteRing z6 = make_zmod(6), z3 = make_zmod(3);
        out.push_back(restrict_scalars(self_module(z3), reduction_hom(z6, z3)));
    }
    return out;
}

}  // namespace fixtures
