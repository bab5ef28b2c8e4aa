#pragma once

#include "eala/report.hpp"

namespace eala {

/// Bounded falsification probe for the non-freeness of W = ker m. Candidate
/// generators are the deterministic kernel basis of the box slice; a
/// candidate falsifies if right multiples of it (multiplier support in
/// [-2*box, 2*box]^2, the full set of degrees whose products can meet the
/// box) reproduce every kernel basis element exactly. Returns NOT-FALSIFIED
/// when no candidate generates the slice — the only possible honest outcome
/// at finite box — and FALSIFIED (status fail) with the generator as witness
/// otherwise.
VerificationReport nonfreeness_probe(int box);

}  // namespace eala
