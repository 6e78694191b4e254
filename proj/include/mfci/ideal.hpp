#pragma once

#include <vector>

#include "mfci/matrix.hpp"

namespace mfci {

// Ideals are generator lists in ctx.ring(), read modulo ctx's relations.
std::vector<Poly> ideal_reduce(const RingCtx& ctx, const std::vector<Poly>& I);  // reduced GB
bool ideal_contains(const RingCtx& ctx, const std::vector<Poly>& I, const Poly& g);
bool ideal_subset(const RingCtx& ctx, const std::vector<Poly>& I, const std::vector<Poly>& J);  // I <= J
bool ideal_equal(const RingCtx& ctx, const std::vector<Poly>& I, const std::vector<Poly>& J);
bool is_unit_ideal(const RingCtx& ctx, const std::vector<Poly>& I);

std::vector<Poly> ideal_quotient(const RingCtx& ctx, const std::vector<Poly>& I, const Poly& g);
std::vector<Poly> ideal_quotient(const RingCtx& ctx, const std::vector<Poly>& I, const std::vector<Poly>& J);
std::vector<Poly> ideal_intersect(const RingCtx& ctx, const std::vector<Poly>& I, const std::vector<Poly>& J);
// I : J^infinity by iterated quotients; throws NonTermination past the cap.
std::vector<Poly> saturate_ideal(const RingCtx& ctx, const std::vector<Poly>& I, const std::vector<Poly>& J,
                                 int cap = 64);
// The T-variables of ctx's ring.
std::vector<Poly> irrelevant_t(const RingCtx& ctx);

// Annihilator of coker(pres).
std::vector<Poly> annihilator(const RingCtx& ctx, const PolyMatrix& pres);
// Annihilator of (im Z + im B) / im B for Z, B with a common target.
std::vector<Poly> subquotient_annihilator(const RingCtx& ctx, const PolyMatrix& Z, const PolyMatrix& B);
// Presentation of M / H^0_J(M) for M = coker(pres); same target module.
PolyMatrix saturate_module(const RingCtx& ctx, const PolyMatrix& pres, const std::vector<Poly>& J, int cap = 64);

// g in sqrt(I + relations), by 1 in I + (1 - t*g) over ring[t].
bool radical_member(const RingCtx& ctx, const std::vector<Poly>& I, const Poly& g);
bool radical_equal(const RingCtx& ctx, const std::vector<Poly>& I, const std::vector<Poly>& J);

// H_1 of the Koszul complex on f vanishes.
bool is_regular_sequence(const RingCtx& Q, const std::vector<Poly>& f);

}  // namespace mfci
