#include <chrono>
#include <functional>

#include "holomult/numcheck.hpp"
#include "holomult/realify.hpp"
#include "holomult/report.hpp"

namespace hlm {

namespace {

constexpr std::size_t kLeadingTerms = 3;

void set_residual(TaskRecord& rec, const CPoly& r) {
  rec.residual_zero = r.is_zero();
  rec.residual = rec.residual_zero ? "0" : leading_terms(r, kLeadingTerms);
}

void set_residual(TaskRecord& rec, const VectorField& r) {
  rec.residual_zero = r.is_zero();
  if (rec.residual_zero) {
    rec.residual = "0";
    return;
  }
  rec.residual.clear();
  for (std::size_t k = 0; k < r.dim(); ++k) {
    if (r[k].is_zero()) continue;
    if (!rec.residual.empty()) rec.residual += "; ";
    rec.residual += "[" + std::to_string(k + 1) + "] " + leading_terms(r[k], kLeadingTerms);
  }
}

void set_residual(TaskRecord& rec, const Multivector& r) {
  rec.residual_zero = r.is_zero();
  if (rec.residual_zero) {
    rec.residual = "0";
    return;
  }
  rec.residual.clear();
  for (const auto& [mask, c] : r.components()) {
    if (!rec.residual.empty()) rec.residual += "; ";
    std::string idx;
    for (const auto k : mask_indices(mask)) idx += std::to_string(k + 1);
    rec.residual += "[" + idx + "] " + leading_terms(c, kLeadingTerms);
  }
}

Verdict pass_if(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

std::vector<std::string> field_text(const VectorField& Z) {
  std::vector<std::string> out;
  for (const auto& c : Z.components()) out.push_back(to_string(c));
  return out;
}

// Integer coefficients in [-3, 3] on a random subset of the monomials of
// degree <= degree; never zero.
CPoly random_poly(std::size_t n, std::uint32_t degree, SplitMix64& rng) {
  std::vector<std::pair<Monomial, GaussRat>> terms;
  std::vector<std::uint32_t> e(n, 0);
  std::function<void(std::size_t, std::uint32_t)> walk = [&](std::size_t k, std::uint32_t left) {
    if (k == n) {
      if (rng.uniform() < 0.5) {
        const long c = static_cast<long>(rng.next() % 7) - 3;
        if (c != 0) terms.emplace_back(Monomial(e), GaussRat(c));
      }
      return;
    }
    for (std::uint32_t d = 0; d <= left; ++d) {
      e[k] = d;
      walk(k + 1, left - d);
    }
    e[k] = 0;
  };
  walk(0, degree);
  CPoly p = CPoly::from_terms(n, terms);
  if (p.is_zero()) p = CPoly::variable(n, 0);
  return p;
}

void theorem_record(TaskRecord& rec, const TheoremCheck& c, const std::string& expect) {
  set_residual(rec, c.complex_residual);
  const bool want_zero = expect == "zero";
  rec.verdict = pass_if(c.consistent() && c.complex_zero() == want_zero);
  rec.derived.emplace_back("expect", expect);
  rec.derived.emplace_back("real_zero", c.real_zero());
  rec.derived.emplace_back("identity_R", c.identity_R);
  rec.derived.emplace_back("identity_I", c.identity_I);
  rec.derived.emplace_back("real_residual_R", leading_terms(c.real_residual_R, kLeadingTerms));
  rec.derived.emplace_back("real_residual_I", leading_terms(c.real_residual_I, kLeadingTerms));
}

void run_one(const Manifest& m, const Task& t, std::uint64_t seed, TaskRecord& rec) {
  const VolumeForm omega = m.volume();
  const std::string& k = t.kind;

  if (k == "first_integral") {
    const Check c = is_first_integral(t.poly("f"), t.field("field"));
    set_residual(rec, c.residual);
    rec.verdict = pass_if(c.holds);
  } else if (k == "last_multiplier") {
    const Check c = is_last_multiplier(t.poly("alpha"), t.field("field"), omega);
    set_residual(rec, c.residual);
    rec.verdict = pass_if(c.holds);
  } else if (k == "inverse_multiplier") {
    const Check c = is_inverse_multiplier(t.poly("beta"), t.field("field"), omega);
    set_residual(rec, c.residual);
    rec.verdict = pass_if(c.holds);
  } else if (k == "darboux_cofactor") {
    const auto pair = darboux_cofactor(t.poly("f"), t.field("field"));
    rec.verdict = pass_if(pair.has_value());
    rec.residual_zero = pair.has_value();
    rec.residual = pair ? "0" : "Z(f) is not divisible by f";
    if (pair) rec.derived.emplace_back("cofactor", to_string(pair->cofactor));
  } else if (k == "darboux_search") {
    const DarbouxSearch s = darboux_multiplier_search(t.field("field"), t.polys.at("candidates"), omega);
    rec.residual_zero = s.status == DarbouxSearch::Status::found;
    rec.residual = rec.residual_zero ? "0" : "no solution";
    switch (s.status) {
      case DarbouxSearch::Status::found: {
        rec.verdict = Verdict::found;
        std::vector<std::string> ex;
        for (const auto& e : s.solution.exponents) ex.push_back(e.to_string());
        rec.derived.emplace_back("exponents", ex);
        std::vector<std::string> cof;
        for (const auto& b : s.solution.basis) cof.push_back(to_string(b.cofactor));
        rec.derived.emplace_back("cofactors", cof);
        rec.derived.emplace_back("nullspace_dim", static_cast<std::int64_t>(s.solution.nullspace.size()));
        break;
      }
      case DarbouxSearch::Status::not_darboux:
        rec.verdict = Verdict::fail;
        rec.residual = "candidate " + std::to_string(s.failed_candidate + 1) + " is not a Darboux polynomial";
        break;
      case DarbouxSearch::Status::inconsistent:
        rec.verdict = Verdict::inconsistent;
        break;
    }
  } else if (k == "symmetry") {
    const SymmetryResult s = symmetry_coefficient(t.field("symmetry"), t.field("field"));
    rec.verdict = pass_if(s.lambda.has_value());
    rec.residual_zero = s.lambda.has_value();
    if (s.lambda) {
      rec.residual = "0";
      rec.derived.emplace_back("lambda", to_string(*s.lambda));
    } else {
      rec.residual = "[Z,S] is not a multiple of Z";
      std::vector<std::string> off;
      for (const auto i : s.offending) off.push_back(std::to_string(i + 1));
      rec.derived.emplace_back("offending_components", off);
    }
  } else if (k == "inverse_from_symmetries") {
    const VectorField& Z = t.field("field");
    const auto& S = t.fields.at("symmetries");
    if (S.size() + 1 != m.dim)
      throw DimensionError("inverse_from_symmetries needs " + std::to_string(m.dim - 1) + " symmetries");
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < S.size(); ++i)
      if (!symmetry_coefficient(S[i], Z).lambda) bad.push_back(std::to_string(i + 1));
    if (!bad.empty()) {
      rec.verdict = Verdict::fail;
      rec.residual = "not symmetries of Z";
      rec.derived.emplace_back("not_symmetries", bad);
    } else {
      const CPoly beta = inverse_from_symmetries(S, Z, omega);
      rec.verdict = pass_if(!beta.is_zero());
      set_residual(rec, is_inverse_multiplier(beta, Z, omega).residual);
      rec.derived.emplace_back("beta", to_string(beta));
    }
  } else if (k == "inverse_from_frame") {
    const FrameResult f = inverse_from_frame(t.fields.at("frame"), t.matrix, t.field("field"), omega);
    set_residual(rec, f.inverse.residual);
    bool ok = f.bracket_ok && f.trace_ok && f.inverse.holds;
    rec.derived.emplace_back("beta", to_string(f.beta));
    rec.derived.emplace_back("bracket_ok", f.bracket_ok);
    rec.derived.emplace_back("trace", to_string(f.trace));
    if (t.polys.count("expect")) {
      const bool match = f.beta == t.poly("expect");
      rec.derived.emplace_back("beta_matches_expect", match);
      ok = ok && match;
    }
    rec.verdict = pass_if(ok);
  } else if (k == "divergence_type") {
    const Check c = divergence_type_check(t.field("w"), t.field("field"), omega);
    set_residual(rec, c.residual);
    rec.verdict = pass_if(c.holds);
  } else if (k == "conformal") {
    const Check c = conformal_equivalence(t.poly("f"), t.field("field"));
    set_residual(rec, c.residual);
    rec.verdict = pass_if(c.holds);
  } else if (k == "jacobi") {
    const Trivector J = jacobiator(*t.bivector);
    set_residual(rec, J);
    rec.verdict = pass_if(J.is_zero());
  } else if (k == "modular") {
    const VectorField M = modular_field(*t.bivector, omega);
    set_residual(rec, M);
    rec.verdict = pass_if(M.is_zero());
    rec.derived.emplace_back("modular_field", field_text(M));
  } else if (k == "unimodular") {
    const FieldCheck c = is_unimodular_with(*t.bivector, t.poly("h"), omega);
    set_residual(rec, c.residual);
    rec.verdict = pass_if(c.holds);
  } else if (k == "self_multiplier") {
    const CPoly r = self_multiplier_residual(t.poly("f"), *t.bivector, omega);
    set_residual(rec, r);
    rec.verdict = pass_if(r.is_zero());
  } else if (k == "self_multiplier_random") {
    const auto count = static_cast<std::size_t>(t.integers.at("count"));
    const auto degree = static_cast<std::uint32_t>(t.integers.at("degree"));
    SplitMix64 rng(seed);
    std::size_t failures = 0;
    CPoly first_bad(m.dim);
    for (std::size_t s = 0; s < count; ++s) {
      const CPoly r = self_multiplier_residual(random_poly(m.dim, degree, rng), *t.bivector, omega);
      if (!r.is_zero() && failures++ == 0) first_bad = r;
    }
    set_residual(rec, first_bad);
    rec.verdict = pass_if(failures == 0);
    rec.derived.emplace_back("samples", static_cast<std::int64_t>(count));
    rec.derived.emplace_back("failures", static_cast<std::int64_t>(failures));
  } else if (k == "hamiltonian_lm") {
    std::optional<CPoly> h;
    if (t.polys.count("h")) h = t.poly("h");
    const CPoly r = hamiltonian_lm_residual(t.poly("alpha"), t.poly("f"), *t.bivector, omega, h);
    set_residual(rec, r);
    rec.verdict = pass_if(r.is_zero());
  } else if (k == "casimir") {
    const VectorField Z = hamiltonian_field(t.poly("f"), *t.bivector);
    set_residual(rec, Z);
    rec.verdict = pass_if(Z.is_zero());
  } else if (k == "exact") {
    const ExactnessResult e = exactness_check(*t.bivector, omega);
    set_residual(rec, e.curl);
    rec.verdict = pass_if(e.exact);
    rec.derived.emplace_back("poisson", e.poisson);
    rec.derived.emplace_back("modular_zero", e.modular_zero);
    rec.derived.emplace_back("triple_zero", e.triple_zero);
  } else if (k == "bivector_lm") {
    const FieldCheck c = bivector_lm_check(t.poly("alpha"), *t.bivector, omega);
    set_residual(rec, c.residual);
    rec.verdict = pass_if(c.holds);
  } else if (k == "dim4_exact") {
    const Dim4Result d = dim4_exactness(*t.bivector, omega, t.point);
    set_residual(rec, d.pfaffian);
    rec.verdict = pass_if(d.exact && d.poisson);
    rec.derived.emplace_back("pfaffian", to_string(d.pfaffian));
    rec.derived.emplace_back("dclosed", d.dclosed);
    rec.derived.emplace_back("exact", d.exact);
    rec.derived.emplace_back("poisson", d.poisson);
    rec.derived.emplace_back("hypothesis_met", d.hypothesis_met);
  } else if (k == "exact_hamiltonian") {
    const Check c = exact_hamiltonian_check(t.poly("h"), *t.bivector, HoloMetric::euclidean(m.dim));
    set_residual(rec, c.residual);
    rec.verdict = pass_if(c.holds);
  } else if (k == "gradient_lm") {
    const CPoly r = gradient_lm_residual(t.poly("alpha"), t.poly("f"), *t.metric);
    set_residual(rec, r);
    rec.verdict = pass_if(r.is_zero());
  } else if (k == "harmonic") {
    const CPoly r = laplacian(t.poly("f"), *t.metric);
    set_residual(rec, r);
    rec.verdict = pass_if(r.is_zero());
  } else if (k == "thlm") {
    theorem_record(rec, check_thlm(t.poly("alpha"), t.field("field"), omega), t.words.at("expect"));
  } else if (k == "tg") {
    theorem_record(rec, check_tg(t.poly("alpha"), t.poly("f"), *t.metric), t.words.at("expect"));
  } else if (k == "th1") {
    theorem_record(rec, check_th1(t.poly("alpha"), t.poly("f"), *t.bivector, omega), t.words.at("expect"));
  } else if (k == "th2") {
    theorem_record(rec, check_th2(t.poly("f"), *t.bivector, omega), t.words.at("expect"));
  } else {
    throw Error("unknown task kind '" + k + "'");
  }
}

}  // namespace

Report run_tasks(const Manifest& m, std::uint64_t seed) {
  Report report;
  report.seed = seed;
  SplitMix64 seeds(seed);
  for (const auto& t : m.tasks) {
    TaskRecord rec;
    rec.id = t.id;
    rec.kind = t.kind;
    const std::uint64_t task_seed = seeds.next();
    const auto start = std::chrono::steady_clock::now();
    try {
      run_one(m, t, task_seed, rec);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(std::string("task '") + t.id + "': " + e.what(), t.line, 1);
    }
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.tasks.push_back(std::move(rec));
  }
  return report;
}

}  // namespace hlm
