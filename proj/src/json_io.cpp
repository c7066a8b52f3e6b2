#include "k3lat/json_io.hpp"

#include <fstream>
#include <limits>

namespace k3lat {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorCode::Parse, what);
}

const Json& field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) parse_fail(std::string("missing field '") + name + "'");
  return *it;
}

std::int64_t int64_from_json(const Json& j, const char* name) {
  Int v = int_from_json(field(j, name));
  if (!v.fits_slong_p()) parse_fail(std::string("field '") + name + "' out of range");
  return v.get_si();
}

}  // namespace

Json int_to_json(const Int& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_unsigned()) return parse_int(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return parse_int(j.get<std::string>());
  parse_fail("expected an integer (number or decimal string)");
}

Json rat_to_json(const Rat& q) { return Json(rat_to_string(q)); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Rat(int_from_json(j));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  parse_fail("expected a rational (\"a/b\" string or integer)");
}

Json vec_to_json(const IntVec& v) {
  Json arr = Json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(int_to_json(v(i)));
  return arr;
}

IntVec int_vec_from_json(const Json& j, Index expected) {
  if (!j.is_array()) parse_fail("expected a coordinate array");
  if (expected >= 0 && static_cast<Index>(j.size()) != expected) {
    parse_fail("coordinate array has length " + std::to_string(j.size()) + ", expected " +
               std::to_string(expected));
  }
  IntVec v(static_cast<Index>(j.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = int_from_json(j[static_cast<std::size_t>(i)]);
  return v;
}

RatVec rat_vec_from_json(const Json& j, Index expected) {
  if (!j.is_array()) parse_fail("expected a coordinate array");
  if (expected >= 0 && static_cast<Index>(j.size()) != expected) {
    parse_fail("coordinate array has length " + std::to_string(j.size()) + ", expected " +
               std::to_string(expected));
  }
  RatVec v(static_cast<Index>(j.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = rat_from_json(j[static_cast<std::size_t>(i)]);
  return v;
}

Json lattice_to_json(const GramLattice& lattice) {
  Json j;
  j["label"] = lattice.label();
  j["rank"] = lattice.rank();
  Json gram = Json::array();
  for (Index r = 0; r < lattice.rank(); ++r) {
    for (Index c = 0; c < lattice.rank(); ++c) gram.push_back(int_to_json(lattice.gram()(r, c)));
  }
  j["gram"] = std::move(gram);
  return j;
}

Json plane_to_json(const Plane& h) {
  auto d = lambda_degree(h.lattice());
  if (!d) {
    throw Error(ErrorCode::InvalidLattice, "only Lambda_d planes have a JSON form");
  }
  Json j;
  j["d"] = *d;
  j["omega1"] = vec_to_json(h.omega1());
  j["omega2"] = vec_to_json(h.omega2());
  return j;
}

Plane plane_from_json(const Json& j, const LatticePtr& lattice) {
  if (!j.is_object()) parse_fail("plane must be a JSON object");
  RatVec w1 = rat_vec_from_json(field(j, "omega1"), lattice->rank());
  RatVec w2 = rat_vec_from_json(field(j, "omega2"), lattice->rank());
  return Plane(lattice, w1, w2);
}

Plane plane_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("plane must be a JSON object");
  std::int64_t d = int64_from_json(j, "d");
  return plane_from_json(j, make_lambda_d(static_cast<long>(d)));
}

Json disc_class_to_json(const DiscClass& c) {
  Json j;
  j["disc"] = int_to_json(c.disc);
  j["p"] = c.residue.modulus();
  j["residue"] = c.residue.value();
  j["legendre"] = c.legendre;
  return j;
}

namespace {

Json residues_to_json(const ResidueSet& r) {
  Json j;
  j["w1w1"] = r.w1w1;
  j["w1w2"] = r.w1w2;
  j["w2w2"] = r.w2w2;
  j["disc"] = r.disc;
  return j;
}

ResidueSet residues_from_json(const Json& j) {
  ResidueSet r;
  r.w1w1 = int64_from_json(j, "w1w1");
  r.w1w2 = int64_from_json(j, "w1w2");
  r.w2w2 = int64_from_json(j, "w2w2");
  r.disc = int64_from_json(j, "disc");
  return r;
}

StepKind step_kind_from_name(const std::string& s) {
  if (s == "step1") return StepKind::Step1;
  if (s == "step2") return StepKind::Step2;
  if (s == "step3") return StepKind::Step3;
  if (s == "step4") return StepKind::Step4;
  parse_fail("unknown step kind '" + s + "'");
}

StepTarget step_target_from_name(const std::string& s) {
  if (s == "omega1") return StepTarget::Omega1;
  if (s == "omega2") return StepTarget::Omega2;
  parse_fail("unknown step target '" + s + "'");
}

}  // namespace

Json step_to_json(const PerturbStep& s) {
  Json j;
  j["kind"] = step_kind_name(s.kind);
  j["direction"] = vec_to_json(s.direction);
  j["N"] = int_to_json(s.n);
  j["target"] = step_target_name(s.target);
  j["residues_before"] = residues_to_json(s.before);
  j["residues_after"] = residues_to_json(s.after);
  return j;
}

PerturbStep step_from_json(const Json& j, Index rank) {
  if (!j.is_object()) parse_fail("step must be a JSON object");
  PerturbStep s{step_kind_from_name(field(j, "kind").get<std::string>()),
                step_target_from_name(field(j, "target").get<std::string>()),
                int_vec_from_json(field(j, "direction"), rank),
                int_from_json(field(j, "N")),
                residues_from_json(field(j, "residues_before")),
                residues_from_json(field(j, "residues_after"))};
  return s;
}

Json certificate_to_json(const PerturbCertificate& cert) {
  Json j;
  j["d"] = cert.d;
  j["p"] = cert.p;
  j["epsilon"] = rat_to_json(cert.epsilon);
  j["input"] = plane_to_json(cert.input);
  j["output"] = plane_to_json(cert.output);
  Json steps = Json::array();
  for (const PerturbStep& s : cert.steps) steps.push_back(step_to_json(s));
  j["steps"] = std::move(steps);
  j["final"] = disc_class_to_json(cert.final_disc);
  j["sqrt_witness"] = cert.sqrt_witness.value();
  j["distance"] = rat_to_json(cert.distance);
  return j;
}

PerturbCertificate certificate_from_json(const Json& j) {
  if (!j.is_object()) parse_fail("certificate must be a JSON object");
  long d = static_cast<long>(int64_from_json(j, "d"));
  std::int64_t p = int64_from_json(j, "p");
  LatticePtr lattice = make_lambda_d(d);
  Plane input = plane_from_json(field(j, "input"), lattice);
  Plane output = plane_from_json(field(j, "output"), lattice);
  std::vector<PerturbStep> steps;
  const Json& steps_json = field(j, "steps");
  if (!steps_json.is_array()) parse_fail("'steps' must be an array");
  for (const Json& s : steps_json) steps.push_back(step_from_json(s, lattice->rank()));
  const Json& final_json = field(j, "final");
  std::int64_t final_p = int64_from_json(final_json, "p");
  if (final_p != p) parse_fail("final disc class has a different p");
  ModP residue(int64_from_json(final_json, "residue"), p);
  DiscClass final_disc{int_from_json(field(final_json, "disc")), residue,
                       static_cast<int>(int64_from_json(final_json, "legendre"))};
  ModP witness(int64_from_json(j, "sqrt_witness"), p);
  return PerturbCertificate{d,
                            p,
                            rat_from_json(field(j, "epsilon")),
                            std::move(input),
                            std::move(output),
                            std::move(steps),
                            std::move(final_disc),
                            witness,
                            rat_from_json(field(j, "distance"))};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    parse_fail("invalid JSON in '" + path + "': " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) parse_fail("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace k3lat
