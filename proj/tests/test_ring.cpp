#include <gtest/gtest.h>

#include <random>
#include <set>
#include <vector>

#include "grcayley/ring.hpp"
#include "oracles.hpp"

using namespace grc;

namespace {

RingPtr gr4_16() { return make_ring({2, 2, 2, std::nullopt}, ModulusPoly{{1, 1, 1}}); }

RingElement elem(const RingContext& ctx, std::vector<u64> c) { return ctx.element(std::move(c)); }

// Rings small enough for exhaustive element-wise checks.
std::vector<RingParams> small_rings() {
    return {{2, 2, 2, {}}, {2, 2, 3, {}}, {2, 3, 2, {}}, {2, 2, 4, {}}, {2, 4, 2, {}}, {3, 2, 2, {}},
            {3, 3, 2, {}}, {3, 2, 3, {}}, {5, 2, 2, {}}, {7, 2, 2, {}}, {2, 3, 3, {}}};
}

}  // namespace

// ---- modulus search ------------------------------------------------------

TEST(FindBasicIrreducible, Char4DegreeTwoIsXSquaredPlusXPlusOne) {
    EXPECT_EQ(find_basic_irreducible({2, 2, 2, {}}).coeffs, (std::vector<u64>{1, 1, 1}));
}

TEST(FindBasicIrreducible, Char9DegreeTwoAcceptsXSquaredPlusXPlusTwo) {
    // brute force: irreducible over F_3 and x has order 8
    const oracle::Poly f{2, 1, 1};
    EXPECT_TRUE(oracle::brute_irreducible(f, 3));
    EXPECT_EQ(oracle::brute_order_of_x(f, 3), 8u);
    EXPECT_NO_THROW(validate_modulus({3, 2, 2, {}}, ModulusPoly{{2, 1, 1}}));
    EXPECT_EQ(find_basic_irreducible({3, 2, 2, {}}).coeffs, (std::vector<u64>{2, 1, 1}));
}

TEST(FindBasicIrreducible, RejectsBadParameters) {
    EXPECT_THROW(find_basic_irreducible({2, 1, 2, {}}), ParameterError);
    EXPECT_THROW(find_basic_irreducible({2, 2, 1, {}}), ParameterError);
    EXPECT_THROW(find_basic_irreducible({4, 2, 2, {}}), ParameterError);
    EXPECT_THROW(find_basic_irreducible({2, 2, 17, {}}), ParameterError);  // 2^34 > 2^32
    EXPECT_NO_THROW(RingParams({2, 2, 16, {}}).validate());
}

TEST(FindBasicIrreducible, ResultIsPrimitiveByBruteForce) {
    for (u64 p : {2, 3, 5})
        for (u64 r : {2, 3, 4})
            for (u64 seed : {0, 1, 7, 12345}) {
                const RingParams params{p, 2, r, seed};
                const auto f = find_basic_irreducible(params);
                ASSERT_EQ(f.coeffs.size(), r + 1);
                EXPECT_EQ(f.coeffs.back(), 1u);
                const oracle::Poly red = f.coeffs;
                EXPECT_TRUE(oracle::brute_irreducible(red, p)) << p << " " << r << " seed " << seed;
                EXPECT_EQ(oracle::brute_order_of_x(red, p), ipow(p, r) - 1);
                EXPECT_EQ(find_basic_irreducible(params), f) << "not deterministic";
            }
}

TEST(ValidateModulus, AgreesWithBruteForceOnAllMonicPolynomials) {
    for (u64 p : {2, 3})
        for (u64 r : {2, 3, 4}) {
            const u64 space = ipow(p, r);
            for (u64 k = 0; k < space; ++k) {
                std::vector<u64> c(r + 1);
                u64 kk = k;
                for (u64 i = 0; i < r; ++i, kk /= p) c[i] = kk % p;
                c[r] = 1;
                const bool expected =
                    oracle::brute_irreducible(c, p) && oracle::brute_order_of_x(c, p) == space - 1;
                bool accepted = true;
                try {
                    validate_modulus({p, 2, r, {}}, ModulusPoly{c});
                } catch (const ModulusError&) {
                    accepted = false;
                }
                EXPECT_EQ(accepted, expected) << "p=" << p << " poly " << format_coeff_list(c);
            }
        }
}

TEST(ModulusFormat, ParsesAndFormats) {
    EXPECT_EQ(format_modulus(ModulusPoly{{1, 1, 1}}), "1,1,1");
    EXPECT_EQ(parse_modulus("1, 1,1").coeffs, (std::vector<u64>{1, 1, 1}));
    EXPECT_THROW(parse_modulus("1,,1"), ParameterError);
    EXPECT_THROW(parse_modulus("1,x"), ParameterError);
    EXPECT_THROW(parse_modulus(""), ParameterError);
}

// ---- make_ring -----------------------------------------------------------

TEST(MakeRing, Gr4_16HasXiEqualX) {
    auto ctx = gr4_16();
    EXPECT_EQ(ctx->xi(), ctx->x());
    EXPECT_EQ(ctx->teichmuller().size(), 3u);
    EXPECT_EQ(ctx->order(), 16u);
    EXPECT_EQ(ctx->characteristic(), 4u);
    EXPECT_TRUE(ctx->has_trace_table());
}

TEST(MakeRing, RejectsReducibleModulus) {
    EXPECT_THROW(make_ring({2, 2, 2, {}}, ModulusPoly{{1, 0, 1}}), ModulusError);
    EXPECT_THROW(make_ring({2, 2, 2, {}}, ModulusPoly{{1, 1}}), ModulusError);
    EXPECT_THROW(make_ring({2, 2, 2, {}}, ModulusPoly{{1, 1, 3}}), ModulusError);
}

TEST(MakeRing, LiftedModulusNeedNotBeReducedLift) {
    // 3 + x + x^2 reduces to x^2 + x + 1 mod 2; any lift is basic irreducible
    auto ctx = make_ring({2, 2, 2, {}}, ModulusPoly{{3, 1, 1}});
    EXPECT_EQ(ctx->teichmuller().size(), 3u);
    EXPECT_EQ(ctx->pow(ctx->xi(), 3), ctx->one());
}

TEST(MakeRing, NoTraceTableAboveCutoff) {
    auto ctx = make_ring({2, 5, 5, {}});  // 2^25 elements
    EXPECT_FALSE(ctx->has_trace_table());
    const auto a = ctx->element({3, 1, 4, 1, 5});
    EXPECT_EQ(ctx->trace(a), oracle::regular_trace(*ctx, a));
}

// ---- arithmetic ----------------------------------------------------------

TEST(RingArith, Gr4_16Examples) {
    auto ctx = gr4_16();
    const auto x = ctx->x();
    EXPECT_EQ(ctx->mul(x, x), elem(*ctx, {3, 3}));
    EXPECT_EQ(ctx->pow(x, 3), ctx->one());
    const std::vector<RingElement> ops{x, x};
    EXPECT_EQ(ring_arith(*ctx, ArithOp::mul, ops), elem(*ctx, {3, 3}));
    EXPECT_EQ(ring_arith(*ctx, ArithOp::pow, std::vector<RingElement>{x}, 3), ctx->one());
    EXPECT_THROW(ring_arith(*ctx, ArithOp::neg, ops), ParameterError);
}

TEST(RingArith, AddInverseIsZero) {
    for (const auto& params : small_rings()) {
        auto ctx = make_ring(params);
        for (u64 i = 0; i < ctx->order(); ++i) {
            const auto a = ctx->from_index(i);
            ASSERT_EQ(ctx->add(a, ctx->neg(a)), ctx->zero());
            ASSERT_EQ(ctx->sub(a, a), ctx->zero());
        }
    }
}

TEST(RingArith, ContextMismatchIsRejected) {
    auto a = gr4_16();
    auto b = gr4_16();
    EXPECT_THROW(a->add(a->one(), b->one()), ContextMismatch);
    EXPECT_THROW(a->mul(b->x(), a->x()), ContextMismatch);
    EXPECT_THROW(a->trace(b->x()), ContextMismatch);
    EXPECT_THROW(a->index_of(RingElement{}), ContextMismatch);
}

TEST(RingArith, RingAxiomsOnSamples) {
    std::mt19937_64 rng(42);
    for (const auto& params : small_rings()) {
        auto ctx = make_ring(params);
        std::uniform_int_distribution<u64> pick(0, ctx->order() - 1);
        for (int k = 0; k < 300; ++k) {
            const auto a = ctx->from_index(pick(rng)), b = ctx->from_index(pick(rng)), c = ctx->from_index(pick(rng));
            ASSERT_EQ(ctx->mul(a, b), ctx->mul(b, a));
            ASSERT_EQ(ctx->mul(ctx->mul(a, b), c), ctx->mul(a, ctx->mul(b, c)));
            ASSERT_EQ(ctx->mul(a, ctx->add(b, c)), ctx->add(ctx->mul(a, b), ctx->mul(a, c)));
        }
    }
}

TEST(RingArith, IndexRoundTrip) {
    auto ctx = make_ring({3, 2, 2, {}});
    for (u64 i = 0; i < ctx->order(); ++i) ASSERT_EQ(ctx->index_of(ctx->from_index(i)), i);
    EXPECT_THROW(ctx->from_index(81), RangeError);
    EXPECT_EQ(ctx->index_of(ctx->element({2, 1})), 2u + 1u * 9u);
}

// ---- Frobenius / trace ---------------------------------------------------

TEST(Frobenius, Gr4_16Examples) {
    auto ctx = gr4_16();
    EXPECT_EQ(ctx->frobenius(ctx->x(), 1), elem(*ctx, {3, 3}));
    EXPECT_EQ(ctx->frobenius(ctx->one(), 1), ctx->one());
    for (u64 i = 0; i < 16; ++i) EXPECT_EQ(ctx->frobenius(ctx->from_index(i), 2), ctx->from_index(i));
}

TEST(Frobenius, MatchesXiBasisDefinition) {
    for (const auto& params : small_rings()) {
        auto ctx = make_ring(params);
        const oracle::XiBasisFrobenius ref(*ctx);
        ASSERT_EQ(ref.reached(), ctx->order()) << "xi powers do not form a basis";
        for (u64 i = 0; i < ctx->order(); ++i) {
            const auto a = ctx->from_index(i);
            ASSERT_EQ(ctx->frobenius(a), ref.apply(a)) << "p=" << params.p << " e=" << params.e << " r=" << params.r;
        }
    }
}

TEST(Frobenius, ReducesToPthPowerModP) {
    std::mt19937_64 rng(3);
    for (const auto& params : small_rings()) {
        auto ctx = make_ring(params);
        std::uniform_int_distribution<u64> pick(0, ctx->order() - 1);
        for (int k = 0; k < 100; ++k) {
            const auto a = ctx->from_index(pick(rng));
            ASSERT_EQ(ctx->project_residue(ctx->frobenius(a)), ctx->project_residue(ctx->pow(a, ctx->p())));
        }
    }
}

TEST(Trace, Gr4_16Examples) {
    auto ctx = gr4_16();
    EXPECT_EQ(ctx->trace(ctx->one()), 2u);
    EXPECT_EQ(ctx->trace(ctx->x()), 3u);
    EXPECT_EQ(ctx->trace(ctx->zero()), 0u);
}

TEST(Trace, EqualsRegularRepresentationTrace) {
    for (const auto& params : small_rings()) {
        auto ctx = make_ring(params);
        for (u64 i = 0; i < ctx->order(); ++i) {
            const auto a = ctx->from_index(i);
            ASSERT_EQ(ctx->trace(a), oracle::regular_trace(*ctx, a));
            ASSERT_EQ(ctx->trace_of_index(i), ctx->trace(a));
        }
    }
}

TEST(Trace, FrobeniusSumIsScalar) {
    auto ctx = make_ring({3, 2, 3, {}});
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<u64> pick(0, ctx->order() - 1);
    for (int k = 0; k < 200; ++k) {
        const auto a = ctx->from_index(pick(rng));
        RingElement sum = ctx->zero();
        for (u64 j = 0; j < ctx->r(); ++j) sum = ctx->add(sum, ctx->frobenius(a, j));
        ASSERT_EQ(sum, ctx->scalar(ctx->trace(a)));
    }
}

// ---- residue field, p-adic digits ----------------------------------------

TEST(ProjectResidue, Examples) {
    auto ctx = gr4_16();
    EXPECT_EQ(ctx->project_residue(elem(*ctx, {3, 3})), (ResidueElement{1, 1}));
    EXPECT_EQ(ctx->project_residue(ctx->scale(ctx->x(), 2)), (ResidueElement{0, 0}));
    const auto theta = ctx->project_residue(ctx->xi());
    fp::Poly t(theta.begin(), theta.end());
    fp::trim(t);
    EXPECT_TRUE(fp::is_primitive_element(t, ctx->modulus().reduce_mod_p(2), 2));
}

TEST(ProjectResidue, IsRingHomomorphism) {
    std::mt19937_64 rng(9);
    auto ctx = make_ring({3, 3, 2, {}});
    const fp::Poly f = ctx->modulus().reduce_mod_p(3);
    auto as_poly = [](ResidueElement v) {
        fp::Poly out(v.begin(), v.end());
        fp::trim(out);
        return out;
    };
    std::uniform_int_distribution<u64> pick(0, ctx->order() - 1);
    for (int k = 0; k < 300; ++k) {
        const auto a = ctx->from_index(pick(rng)), b = ctx->from_index(pick(rng));
        const auto ma = as_poly(ctx->project_residue(a)), mb = as_poly(ctx->project_residue(b));
        ASSERT_EQ(as_poly(ctx->project_residue(ctx->mul(a, b))), fp::mulmod(ma, mb, f, 3));
        auto sum = as_poly(ctx->project_residue(ctx->add(a, b)));
        ASSERT_EQ(sum, fp::rem(fp::sub(ma, fp::sub(fp::Poly{}, mb, 3), 3), f, 3));
    }
}

TEST(PAdic, Gr4_16Examples) {
    auto ctx = gr4_16();
    auto three = ctx->padic_coords(ctx->scalar(3));
    ASSERT_EQ(three.digits.size(), 2u);
    EXPECT_EQ(three.digits[0], ctx->one());
    EXPECT_EQ(three.digits[1], ctx->one());
    auto two_x = ctx->padic_coords(ctx->scale(ctx->x(), 2));
    EXPECT_EQ(two_x.digits[0], ctx->zero());
    EXPECT_EQ(two_x.digits[1], ctx->x());
    for (const auto& d : ctx->padic_coords(ctx->zero()).digits) EXPECT_EQ(d, ctx->zero());
}

TEST(PAdic, RoundTripAndUnitCriterion) {
    for (const auto& params : small_rings()) {
        auto ctx = make_ring(params);
        for (u64 i = 0; i < ctx->order(); ++i) {
            const auto a = ctx->from_index(i);
            const auto coords = ctx->padic_coords(a);
            ASSERT_EQ(coords.digits.size(), ctx->e());
            for (const auto& d : coords.digits)
                ASSERT_TRUE(d == ctx->zero() || ctx->teichmuller_log(d).has_value());
            ASSERT_EQ(ctx->reassemble(coords), a);
            ASSERT_EQ(ctx->is_unit(a), coords.digits[0] != ctx->zero());
        }
    }
}

TEST(IsUnit, Examples) {
    auto ctx = gr4_16();
    EXPECT_TRUE(ctx->is_unit(elem(*ctx, {2, 1})));
    EXPECT_FALSE(ctx->is_unit(ctx->scalar(2)));
    EXPECT_FALSE(ctx->is_unit(ctx->zero()));
    auto c9 = make_ring({3, 2, 2, {}});
    EXPECT_FALSE(c9->is_unit(c9->scalar(3)));
    EXPECT_FALSE(c9->is_unit(c9->scalar(6)));
    EXPECT_TRUE(c9->is_unit(c9->scalar(8)));
}

TEST(IsUnit, UnitsHaveInverses) {
    for (const auto& params : small_rings()) {
        auto ctx = make_ring(params);
        std::set<u64> units;
        for (u64 i = 0; i < ctx->order(); ++i)
            if (ctx->is_unit(ctx->from_index(i))) units.insert(i);
        EXPECT_EQ(units.size(), ctx->order() - ctx->order() / ctx->residue_order());
        // a unit of a finite ring has multiplicative order dividing |GR^*|
        const u64 unit_order = units.size();
        for (u64 i : units) ASSERT_EQ(ctx->pow(ctx->from_index(i), unit_order), ctx->one());
    }
}

// ---- Teichmuller group ----------------------------------------------------

TEST(Teichmuller, XiHasExactOrder) {
    for (const auto& params : small_rings()) {
        auto ctx = make_ring(params);
        const u64 ord = ctx->residue_order() - 1;
        EXPECT_EQ(ctx->pow(ctx->xi(), ord), ctx->one());
        for (u64 k = 1; k < ord; ++k) ASSERT_NE(ctx->pow(ctx->xi(), k), ctx->one());
        for (u64 t = 0; t < ord; ++t) ASSERT_EQ(ctx->teichmuller()[t], ctx->pow(ctx->xi(), t));
    }
}

TEST(Teichmuller, PairwiseDifferencesAreUnits) {
    for (const auto& params : small_rings()) {
        auto ctx = make_ring(params);
        const auto& g1 = ctx->teichmuller();
        for (std::size_t i = 0; i < g1.size(); ++i)
            for (std::size_t j = 0; j < g1.size(); ++j)
                if (i != j) {
                    ASSERT_TRUE(ctx->is_unit(ctx->sub(g1[i], g1[j])));
                }
    }
}

TEST(Teichmuller, ClosedUnderPthPower) {
    auto ctx = make_ring({5, 2, 2, {}});
    for (const auto& g : ctx->teichmuller()) EXPECT_TRUE(ctx->teichmuller_log(ctx->pow(g, 5)).has_value());
    EXPECT_FALSE(ctx->teichmuller_log(ctx->scalar(2)).has_value());  // 2 is a unit but 2^24 != 1 mod 25
}
