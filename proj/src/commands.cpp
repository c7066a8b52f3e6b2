#include "k3lat/commands.hpp"

#include "k3lat/json_io.hpp"
#include "k3lat/sample.hpp"

#include <iostream>
#include <ostream>

namespace k3lat::cli {

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Parse:
      return kExitParse;
    case ErrorCode::NotFound:
    case ErrorCode::NoRootVector:
    case ErrorCode::NoDeltaFound:
    case ErrorCode::EtaNotFound:
    case ErrorCode::NoSolution:
      return kExitExhausted;
    default:
      return kExitPrecondition;
  }
}

int run_lattice_info(long d, std::ostream& out) {
  GramLattice lattice = build_lambda_d(d);
  Signature sig = lattice.signature();
  Json j;
  j["label"] = lattice.label();
  j["rank"] = lattice.rank();
  j["det"] = int_to_json(lattice.det());
  j["signature"] = Json::array({sig.n_plus, sig.n_minus});
  j["even"] = lattice.is_even();
  Json gram = Json::array();
  for (Index r = 0; r < lattice.rank(); ++r) {
    for (Index c = 0; c < lattice.rank(); ++c) gram.push_back(int_to_json(lattice.gram()(r, c)));
  }
  j["gram"] = std::move(gram);
  out << j.dump(2) << "\n";
  return kExitOk;
}

namespace {

Json verdict_json(bool holds, const DiscClass& w) {
  Json j;
  j["holds"] = holds;
  j["disc"] = int_to_json(w.disc);
  j["residue"] = w.residue.value();
  j["legendre"] = w.legendre;
  if (w.legendre == +1) j["sqrt"] = sqrt_mod(w.residue).value();
  return j;
}

}  // namespace

int run_check(const std::string& in_path, std::int64_t p, std::ostream& out) {
  require_odd_prime(p);
  Plane h = plane_from_json(load_json_file(in_path));
  PropertyRResult rational = property_r(h, p);
  PropertyRIntegralResult integral = property_r_integral(h, p);
  Json j;
  j["d"] = *lambda_degree(h.lattice());
  j["p"] = p;
  j["property_r"] = verdict_json(rational.holds, rational.witness);
  Json ij = verdict_json(integral.holds, integral.witness);
  ij["basis"] = Json::array({vec_to_json(integral.basis[0]), vec_to_json(integral.basis[1])});
  j["property_r_integral"] = std::move(ij);
  j["agree"] = rational.holds == integral.holds;
  out << j.dump(2) << "\n";
  return kExitOk;
}

int run_perturb(const std::string& in_path, std::int64_t p, const std::string& epsilon,
                const std::string& out_path, std::ostream& out) {
  Rat eps = parse_rat(epsilon);
  Plane h = plane_from_json(load_json_file(in_path));
  PerturbCertificate cert = make_property_r(h, p, eps);
  VerifyResult verdict = verify_certificate(cert);
  Json cert_json = certificate_to_json(cert);
  if (out_path.empty()) {
    out << cert_json.dump(2) << "\n";
  } else {
    write_json_file(out_path, cert_json);
  }
  Json summary;
  summary["verified"] = verdict.ok;
  summary["distance"] = rat_to_json(cert.distance);
  summary["final_residue"] = cert.final_disc.residue.value();
  summary["sqrt_witness"] = cert.sqrt_witness.value();
  if (!out_path.empty()) {
    summary["certificate"] = out_path;
    out << summary.dump(2) << "\n";
  }
  if (!verdict.ok) {
    for (const std::string& r : verdict.reasons) std::cerr << "k3lat: verify: " << r << "\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int run_verify(const std::string& in_path, std::ostream& out) {
  PerturbCertificate cert = certificate_from_json(load_json_file(in_path));
  VerifyResult verdict = verify_certificate(cert);
  Json j;
  j["ok"] = verdict.ok;
  j["d"] = cert.d;
  j["p"] = cert.p;
  j["distance"] = rat_to_json(cert.distance);
  j["reasons"] = verdict.reasons;
  out << j.dump(2) << "\n";
  return verdict.ok ? kExitOk : kExitVerifyFailed;
}

int run_lemma_sweep(std::int64_t p_max, std::ostream& out) {
  out << "p,pairs,solved,max_y\n";
  if (p_max < 5) {
    std::cerr << "k3lat: lemma sweep needs p_max >= 5 (p = 3 is excluded: A=2,B=2 has no "
                 "solution); emitting an empty table\n";
    return kExitOk;
  }
  for (std::int64_t p = 5; p <= p_max; p += 2) {
    if (!is_prime(p)) continue;
    std::int64_t pairs = 0, solved = 0, max_y = 0;
    for (std::int64_t a = 1; a < p; ++a) {
      for (std::int64_t b = 1; b < p; ++b) {
        ++pairs;
        auto [y, square] = solve_residue_lemma(ModP(a, p), ModP(b, p));
        (void)square;
        ++solved;
        if (y.value() > max_y) max_y = y.value();
      }
    }
    out << p << "," << pairs << "," << solved << "," << max_y << "\n";
    if (log_enabled()) std::cerr << "k3lat: sweep p=" << p << " done\n";
  }
  return kExitOk;
}

namespace {

Json report_to_json(const SampleReport& r) {
  Json j;
  j["d"] = r.d;
  j["p"] = r.p;
  j["epsilon"] = rat_to_json(r.epsilon);
  j["trials"] = r.trials;
  j["successes"] = r.successes;
  if (r.has_stats) {
    Json stats;
    stats["min"] = rat_to_json(r.dist_min);
    stats["max"] = rat_to_json(r.dist_max);
    stats["mean"] = rat_to_json(r.dist_mean);
    j["distance_stats"] = std::move(stats);
  } else {
    j["distance_stats"] = nullptr;
  }
  j["posdef_count"] = r.posdef_inputs;
  j["posdef_output_count"] = r.posdef_outputs;
  j["seed"] = r.seed;
  j["require_posdef"] = r.require_posdef;
  return j;
}

}  // namespace

int run_sample_density(long d, std::int64_t p, long trials, const std::string& epsilon,
                       std::uint64_t seed, bool require_posdef, const std::string& out_path,
                       std::ostream& out) {
  Rat eps = parse_rat(epsilon);
  if (eps <= 0) {
    throw Error(ErrorCode::Precondition, "epsilon must be positive");
  }
  SampleReport report = run_density_sample(d, p, trials, eps, seed, require_posdef);
  Json j = report_to_json(report);
  if (out_path.empty()) {
    out << j.dump(2) << "\n";
  } else {
    write_json_file(out_path, j);
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace k3lat::cli
