#pragma once

// The constructive density engine. Given a rational plane H in Lambda_d, an
// odd prime p (p >= 5, p not dividing d) and a rational bound epsilon, it
// produces a nearby plane with Property R through at most four basis
// perturbations of shape omega <- omega + (1/N) * direction:
//
//   step 1: make (w1,w1) nonzero mod p, direction a norm -2 vector off H;
//   step 2: make disc nonzero mod p, direction found among root sums;
//   (diagonalize: same span, orthogonal basis)
//   step 3: find a primitive eta orthogonal to H with (eta,eta) nonzero mod p,
//           re-perturbing w2 by an orthogonal primitive vector when every
//           complement vector has vanishing norm residue (at most 3 rounds);
//   step 4: pick y with A - B*y^2 a nonzero square (B = -(w1,w1)(eta,eta)),
//           then N with 1/N = y mod p.
//
// Each perturbation stores the integer vector N*omega + direction,
// re-primitivized; the scaling factors stay coprime to p, so mod-p residues
// only move by nonzero squares and the final square class is what the basis
// computation says it is. Every run yields a replayable certificate.
//
// Distance model: a step moving target vector t by direction/N costs
// |direction|_inf / (N * |t|_inf), the perturbation size of the sup-norm-
// normalized basis vector. N floors derived from a budget make each of the
// four steps cost at most epsilon/4 (fallback rounds split step 3's share),
// so the total never exceeds epsilon.

#include "k3lat/plane.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace k3lat {

enum class StepKind { Step1, Step2, Step3, Step4 };
enum class StepTarget { Omega1, Omega2 };

const char* step_kind_name(StepKind k);
const char* step_target_name(StepTarget t);

/// Named mod-p snapshots of the basis pairings, recorded around every step.
struct ResidueSet {
  std::int64_t w1w1 = 0;
  std::int64_t w1w2 = 0;
  std::int64_t w2w2 = 0;
  std::int64_t disc = 0;
  bool operator==(const ResidueSet&) const = default;
};

ResidueSet residues_of(const Plane& h, std::int64_t p);

struct PerturbStep {
  StepKind kind;
  StepTarget target;
  IntVec direction;  // the zero vector encodes an identity step
  Int n;             // >= 1; coprime to p for non-identity steps
  ResidueSet before;
  ResidueSet after;
  bool identity() const { return is_zero(direction); }
};

/// Floor policy for the denominators N: either an explicit minimum (the
/// N_min parameter of the step operations) or a per-step distance budget,
/// from which the minimum is ceil(|dir|_inf / (budget * |target|_inf)).
class NBound {
 public:
  static NBound floor(Int n_min);
  static NBound budget(Rat share);

  Int n_min_for(const IntVec& direction, const IntVec& target) const;
  NBound split(int parts) const;  // budget / parts; floors are unchanged

 private:
  NBound() = default;
  std::variant<Int, Rat> policy_;
};

struct PerturbCertificate {
  long d = 0;
  std::int64_t p = 0;
  Rat epsilon;
  Plane input;
  Plane output;
  std::vector<PerturbStep> steps;
  DiscClass final_disc;
  ModP sqrt_witness;
  Rat distance;
};

/// Ensures (w1,w1) is nonzero mod p, perturbing w1 by a norm -2 vector not in
/// H when needed. Identity step if the residue is already nonzero.
std::pair<Plane, PerturbStep> step1_fix_norm(const Plane& h, std::int64_t p, const NBound& bound);

/// Ensures disc is nonzero mod p, perturbing w2. Requires (w1,w1) nonzero
/// mod p. The direction is the first root (or orthogonal root sum) whose
/// leading coefficient (w1,w1)(d,d) - (w1,d)^2 is nonzero mod p.
std::pair<Plane, PerturbStep> step2_fix_disc(const Plane& h, std::int64_t p, const NBound& bound);

struct Step3Result {
  IntVec eta;                      // primitive, orthogonal to plane, (eta,eta) != 0 mod p
  Plane plane;                     // possibly re-perturbed
  std::vector<PerturbStep> steps;  // one identity entry, or 1..3 fallback perturbations
};

/// Finds eta orthogonal to H with nonzero norm residue. Requires a
/// diagonalized plane with both (wi,wi) nonzero mod p, and p not dividing the
/// lattice determinant. Searches the complement basis and its pairwise sums;
/// if all residues vanish the whole complement Gram is zero mod p, and w2 is
/// re-perturbed by a primitive orthogonal vector (at most 3 rounds, then
/// EtaNotFound).
Step3Result step3_find_eta(const Plane& h, std::int64_t p, const NBound& bound);

/// Final step: makes disc a nonzero square mod p using eta from step 3.
/// Identity when disc is already a square.
std::pair<Plane, PerturbStep> step4_make_square(const Plane& h, const IntVec& eta, std::int64_t p,
                                                const NBound& bound);

/// Runs steps 1, 2, diagonalize, 3, 4 and packages the replayable trace.
/// Requires p an odd prime >= 5 with p not dividing d, and a Lambda_d ambient
/// lattice. The output plane satisfies property_r at p and lies within
/// epsilon of the input in the distance model above.
PerturbCertificate make_property_r(const Plane& h, std::int64_t p, const Rat& epsilon);

/// One recorded perturbation applied to a plane: target <- primitivize(N*t + dir).
Plane apply_step(const Plane& h, const PerturbStep& step);

/// Relative size |dir|_inf / (N * |t|_inf) of a recorded step; 0 for identity.
Rat step_distance(const PerturbStep& step, const IntVec& target_before);

struct VerifyResult {
  bool ok = false;
  std::vector<std::string> reasons;
  explicit operator bool() const { return ok; }
};

/// Full certificate audit: replays the steps from the input plane (applying
/// diagonalization after the step-2 entry, as the engine does), recomputes
/// every recorded residue, checks N positivity/coprimality, confirms the
/// replay reproduces the output bit-exactly, reclassifies the final
/// discriminant (Legendre +1, canonical square-root witness), and re-derives
/// the distance. Returns the reasons for any failure instead of throwing.
VerifyResult verify_certificate(const PerturbCertificate& cert);

}  // namespace k3lat
