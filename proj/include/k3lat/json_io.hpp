#pragma once

// JSON forms of the toolkit's objects. Field order is fixed (golden files
// compare bytes). Integers that fit in 64 bits are emitted as JSON numbers,
// larger ones as decimal strings; rationals are "a/b" strings (or "a" when
// the denominator is 1). Parsers accept both encodings.

#include "k3lat/perturb.hpp"

#include "json.hpp"

#include <string>

namespace k3lat {

using Json = nlohmann::ordered_json;

Json int_to_json(const Int& x);
Int int_from_json(const Json& j);

Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j);

Json vec_to_json(const IntVec& v);
IntVec int_vec_from_json(const Json& j, Index expected);
RatVec rat_vec_from_json(const Json& j, Index expected);

/// {label, rank, gram: row-major integers}
Json lattice_to_json(const GramLattice& lattice);

/// {d, omega1, omega2}; the ambient lattice is Lambda_d.
Json plane_to_json(const Plane& h);
Plane plane_from_json(const Json& j);
Plane plane_from_json(const Json& j, const LatticePtr& lattice);

/// {disc, p, residue, legendre}
Json disc_class_to_json(const DiscClass& c);

Json step_to_json(const PerturbStep& s);
PerturbStep step_from_json(const Json& j, Index rank);

/// {d, p, epsilon, input, output, steps, final, sqrt_witness, distance}
Json certificate_to_json(const PerturbCertificate& cert);
PerturbCertificate certificate_from_json(const Json& j);

Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace k3lat
