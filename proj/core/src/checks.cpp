#include "invharm/checks.hpp"

#include <stdexcept>

#include "invharm/specfile.hpp"

namespace invharm {

namespace {

std::string dims(const Subspace& s) { return std::to_string(s.dim()); }

CheckResult make(const std::string& id, const std::string& statement, bool pass,
                 const std::string& witness = "") {
  return {id, pass ? CheckStatus::Pass : CheckStatus::Fail, statement,
          pass ? "" : witness};
}

CheckResult not_applicable(const std::string& id, const std::string& statement,
                           const std::string& why) {
  return {id, CheckStatus::NotApplicable, statement, why};
}

// Direct-sum decomposition check at subspace level: parts are independent and
// together span the whole space.
CheckResult decomposition(const std::string& id, const std::string& statement,
                          const Subspace& whole, const Subspace& a, const Subspace& b) {
  Subspace s = sum(a, b);
  bool direct = intersect(a, b).dim() == 0;
  bool equal = (s == whole);
  std::string witness = "dims: whole = " + dims(whole) + ", first = " + dims(a) +
                        ", second = " + dims(b) + ", sum = " + dims(s) +
                        (direct ? "" : ", intersection nonzero");
  return make(id, statement, direct && equal, witness);
}

}  // namespace

bool any_failed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return true;
  return false;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "not-applicable";
  }
}

std::vector<CheckResult> verify_structural(const OperatorSuite& suite) {
  std::vector<CheckResult> out;
  const std::size_t total = suite.total();
  const auto& zb = suite.zbasis();

  auto zero = [&](const std::string& id, const std::string& st, const Matrix& m) {
    out.push_back(make(id, st, m.is_zero(), "nonzero matrix"));
  };

  zero("d-squared-zero", "d o d = 0", suite.d() * suite.d());
  zero("d-component-sum", "d = mu + del + dbar + mubar",
       suite.mu() + suite.del() + suite.dbar() + suite.mubar() - suite.d());
  zero("rel-mubar-squared", "mubar o mubar = 0", suite.mubar() * suite.mubar());
  zero("rel-mubar-dbar", "mubar dbar + dbar mubar = 0",
       suite.mubar() * suite.dbar() + suite.dbar() * suite.mubar());
  zero("rel-dbar-squared", "dbar^2 + mubar del + del mubar = 0",
       suite.dbar() * suite.dbar() + suite.mubar() * suite.del() +
           suite.del() * suite.mubar());
  zero("rel-bidegree-mix", "mu mubar + mubar mu + del dbar + dbar del = 0",
       suite.mu() * suite.mubar() + suite.mubar() * suite.mu() +
           suite.del() * suite.dbar() + suite.dbar() * suite.del());
  zero("d-delta-sum", "d = delta + deltabar",
       suite.delta() + suite.deltabar() - suite.d());
  zero("dc-commutator", "dc = i (deltabar - delta)",
       suite.dc() - Scalar::i() * (suite.deltabar() - suite.delta()));
  out.push_back(make("j-action-bigraded", "pullback by J acts as i^(p-q) on A^(p,q)",
                     suite.to_complex() * suite.real().j_action() * suite.to_real() ==
                         suite.j_forms(),
                     "transported action is not the bidegree diagonal"));

  if (suite.n() == 4) {
    out.push_back(make("star-involution", "star o star = id",
                       suite.star() * suite.star() == Matrix::identity(total),
                       "star squared differs from the identity"));
    bool bidegree_ok = true;
    for (std::size_t j = 0; j < total && bidegree_ok; ++j) {
      Mask mj = zb.mask_at(j);
      for (std::size_t i = 0; i < total; ++i) {
        if (suite.star()(i, j).is_zero()) continue;
        Mask mi = zb.mask_at(i);
        if (zb.p_of(mi) != 2 - zb.q_of(mj) || zb.q_of(mi) != 2 - zb.p_of(mj)) {
          bidegree_ok = false;
          break;
        }
      }
    }
    out.push_back(make("star-bidegree", "star maps A^(p,q) to A^(2-q,2-p)", bidegree_ok,
                       "off-block entry found"));
    zero("delta-deltabar-product", "delta deltabar = del dbar + mubar mu",
         suite.delta() * suite.deltabar() -
             (suite.del() * suite.dbar() + suite.mubar() * suite.mu()));
  } else {
    out.push_back(not_applicable("star-involution", "star o star = id", "dim != 4"));
    out.push_back(not_applicable("star-bidegree", "star maps A^(p,q) to A^(2-q,2-p)",
                                 "dim != 4"));
    out.push_back(not_applicable("delta-deltabar-product",
                                 "delta deltabar = del dbar + mubar mu", "dim != 4"));
  }

  {
    const auto& real = suite.real();
    Vec omsq = real.basis().wedge(real.omega(), real.omega());
    Vec twovol(real.basis().size());
    twovol[real.basis().index_of((Mask(1) << suite.n()) - 1)] =
        Scalar(real.volume_coefficient() * 2);
    out.push_back(make("omega-volume", "omega ^ omega = 2 vol", omsq == twovol,
                       "wedge square differs from twice the volume form"));
  }
  {
    bool type_ok = true;
    for (std::size_t i = 0; i < total; ++i) {
      Mask m = zb.mask_at(i);
      if (!suite.omega()[i].is_zero() && !(zb.p_of(m) == 1 && zb.q_of(m) == 1))
        type_ok = false;
    }
    bool real_ok = suite.conj_vec(suite.omega()) == suite.omega();
    out.push_back(make("omega-type", "omega is a real (1,1)-form", type_ok && real_ok,
                       type_ok ? "not conjugation-invariant" : "has non-(1,1) component"));
  }

  out.push_back(make("integrability-consistency",
                     "N_J = 0 on all frame pairs iff mubar = 0",
                     suite.integrable() == suite.validation().integrable,
                     "Nijenhuis tensor and mubar disagree"));

  const char* na = "structure is not integrable";
  if (suite.integrable()) {
    zero("complex-del-squared", "del o del = 0 (integrable)", suite.del() * suite.del());
    zero("complex-dbar-squared", "dbar o dbar = 0 (integrable)",
         suite.dbar() * suite.dbar());
    zero("complex-anticommute", "del dbar + dbar del = 0 (integrable)",
         suite.del() * suite.dbar() + suite.dbar() * suite.del());
  } else {
    out.push_back(not_applicable("complex-del-squared", "del o del = 0 (integrable)", na));
    out.push_back(not_applicable("complex-dbar-squared", "dbar o dbar = 0 (integrable)", na));
    out.push_back(
        not_applicable("complex-anticommute", "del dbar + dbar del = 0 (integrable)", na));
  }
  return out;
}

std::vector<CheckResult> verify_almost_hermitian(const OperatorSuite& suite) {
  std::vector<CheckResult> out;
  static const std::vector<std::pair<std::string, std::string>> kIds = {
      {"h2-deltabar-decomposition",
       "H^2_deltabar = H^(1,1)_dbar (+) H^J_anti (exact subspaces)"},
      {"h2-deltadeltabar-decomposition",
       "H^2_(delta+deltabar) = H^(1,1)_(del+dbar) (+) H^J_anti (exact subspaces)"},
      {"h3-conjugate-decomposition",
       "H^3_(delta+deltabar) = H^(2,1)_(del+dbar) (+) conjugate (exact subspaces)"},
      {"h2-deltadeltabar-count", "h^2_(delta+deltabar) = b^- + 1 + h^-_J"},
      {"h11-deldbar-count", "h^(1,1)_(del+dbar) = b^- + 1"},
      {"deltabar-duality", "h^k_deltabar = h^(4-k)_deltabar for all k"},
      {"anti-invariant-conjugation", "H^J_anti is conjugation-stable"},
  };
  if (suite.n() != 4) {
    for (const auto& [id, st] : kIds) out.push_back(not_applicable(id, st, "dim != 4"));
    return out;
  }

  Subspace h2_deltabar = solve(HarmonicQuery::graded(Family::Deltabar, 2), suite);
  Subspace h2_dd = solve(HarmonicQuery::graded(Family::DeltaDeltabar, 2), suite);
  Subspace h11_dbar = solve(HarmonicQuery::bigraded(Family::Dbar, 1, 1), suite);
  Subspace h11_deldbar = solve(HarmonicQuery::bigraded(Family::DelDbar, 1, 1), suite);
  Subspace anti = solve(HarmonicQuery::graded(Family::AntiInvariant, 2), suite);
  Subspace h3_dd = solve(HarmonicQuery::graded(Family::DeltaDeltabar, 3), suite);
  Subspace h21 = solve(HarmonicQuery::bigraded(Family::DelDbar, 2, 1), suite);

  out.push_back(decomposition(kIds[0].first, kIds[0].second, h2_deltabar, h11_dbar, anti));
  out.push_back(decomposition(kIds[1].first, kIds[1].second, h2_dd, h11_deldbar, anti));
  out.push_back(
      decomposition(kIds[2].first, kIds[2].second, h3_dd, h21, suite.conj_subspace(h21)));

  BettiNumbers bn = betti(suite);
  {
    int lhs = int(h2_dd.dim());
    int rhs = bn.b_minus + 1 + int(anti.dim());
    out.push_back(make(kIds[3].first, kIds[3].second, lhs == rhs,
                       std::to_string(lhs) + " != " + std::to_string(bn.b_minus) + " + 1 + " +
                           std::to_string(anti.dim())));
  }
  {
    int lhs = int(h11_deldbar.dim());
    out.push_back(make(kIds[4].first, kIds[4].second, lhs == bn.b_minus + 1,
                       std::to_string(lhs) + " != " + std::to_string(bn.b_minus + 1)));
  }
  {
    bool ok = true;
    std::string w;
    std::array<int, 5> h{};
    for (int k = 0; k <= 4; ++k)
      h[k] = int(solve(HarmonicQuery::graded(Family::Deltabar, k), suite).dim());
    for (int k = 0; k <= 4; ++k)
      if (h[k] != h[4 - k]) {
        ok = false;
        w = "k = " + std::to_string(k) + ": " + std::to_string(h[k]) +
            " != " + std::to_string(h[4 - k]);
      }
    out.push_back(make(kIds[5].first, kIds[5].second, ok, w));
  }
  out.push_back(make(kIds[6].first, kIds[6].second, suite.conj_subspace(anti) == anti,
                     "conjugation moves the space"));
  return out;
}

std::vector<CheckResult> verify_almost_hermitian(const ManifoldSpec& spec) {
  OperatorSuite suite(spec);
  return verify_almost_hermitian(suite);
}

std::vector<CheckResult> verify_almost_kahler(const OperatorSuite& suite) {
  std::vector<CheckResult> out;
  struct Cell {
    std::string id;
    std::string statement;
  };
  static const std::vector<Cell> kCells = {
      {"ak-table-deltabar-k1", "h^1_deltabar = h^1_(d+dc)"},
      {"ak-table-deltabar-k2", "h^2_deltabar = b^- + 1 + h^-_J"},
      {"ak-table-deltabar-k3", "h^3_deltabar = h^1_(d+dc)"},
      {"ak-table-deltadeltabar-k1", "h^1_(delta+deltabar) = h^1_(d+dc)"},
      {"ak-table-deltadeltabar-k2", "h^2_(delta+deltabar) = b^- + 1 + h^-_J"},
      {"ak-table-deltadeltabar-k3", "h^3_(delta+deltabar) = h^1_(d+dc)"},
      {"ak-table-d-10", "2 h^(1,0)_d = h^1_(d+dc)"},
      {"ak-table-d-01", "2 h^(0,1)_d = h^1_(d+dc)"},
      {"ak-table-d-20", "h^(2,0)_d = 0"},
      {"ak-table-d-11", "h^(1,1)_d = b^- + 1"},
      {"ak-table-d-02", "h^(0,2)_d = 0"},
      {"ak-table-d-21", "2 h^(2,1)_d = h^1_(d+dc)"},
      {"ak-table-d-12", "2 h^(1,2)_d = h^1_(d+dc)"},
      {"ak-table-ddc-k1", "h^1_(d+dc) determines the k = 1 column"},
      {"ak-table-ddc-k2", "h^2_(d+dc) = b^- + 1 + h^-_J"},
      {"ak-table-ddc-k3", "h^3_(d+dc) = b_1"},
      {"ak-harmonic-spaces-coincide",
       "H^k_deltabar = H^k_(delta+deltabar) as subspaces, all k"},
      {"ak-holomorphic-1forms",
       "A^(1,0) n ker dbar = A^(1,0) n ker d = H^(1,0)_d = H^(1,0)_dbar"},
      {"ak-star-10-21", "star(H^(1,0)_dbar) = H^(2,1)_(del+dbar)"},
      {"ak-star-01-12", "star(H^(0,1)_dbar) = H^(1,2)_(del+dbar)"},
      {"ak-h1-doubling", "h^1_(d+dc) = 2 h^(1,0)_d"},
  };

  if (suite.n() != 4 || !suite.almost_kahler()) {
    const char* why = suite.n() != 4 ? "dim != 4" : "d omega != 0 (not almost Kahler)";
    for (const auto& cell : kCells) out.push_back(not_applicable(cell.id, cell.statement, why));
    return out;
  }

  HarmonicReport rep = full_report(suite);
  const int q1 = rep.ddc_k[1];
  const int r2 = rep.betti.b_minus + 1 + rep.h_minus_J;

  auto cell = [&](std::size_t idx, int lhs, int rhs) {
    out.push_back(make(kCells[idx].id, kCells[idx].statement, lhs == rhs,
                       std::to_string(lhs) + " != " + std::to_string(rhs)));
  };

  cell(0, rep.deltabar_k[1], q1);
  cell(1, rep.deltabar_k[2], r2);
  cell(2, rep.deltabar_k[3], q1);
  cell(3, rep.delta_deltabar_k[1], q1);
  cell(4, rep.delta_deltabar_k[2], r2);
  cell(5, rep.delta_deltabar_k[3], q1);
  cell(6, 2 * rep.d_pq[1][0], q1);
  cell(7, 2 * rep.d_pq[0][1], q1);
  cell(8, rep.d_pq[2][0], 0);
  cell(9, rep.d_pq[1][1], rep.betti.b_minus + 1);
  cell(10, rep.d_pq[0][2], 0);
  cell(11, 2 * rep.d_pq[2][1], q1);
  cell(12, 2 * rep.d_pq[1][2], q1);
  cell(13, rep.ddc_k[1], q1);  // the table parameter itself
  cell(14, rep.ddc_k[2], r2);
  cell(15, rep.ddc_k[3], rep.betti.b[1]);

  {
    bool ok = true;
    std::string w;
    for (int k = 0; k <= 4 && ok; ++k) {
      Subspace a = solve(HarmonicQuery::graded(Family::Deltabar, k), suite);
      Subspace b = solve(HarmonicQuery::graded(Family::DeltaDeltabar, k), suite);
      if (!(a == b)) {
        ok = false;
        w = "k = " + std::to_string(k) + ": dims " + dims(a) + " vs " + dims(b);
      }
    }
    out.push_back(make(kCells[16].id, kCells[16].statement, ok, w));
  }
  {
    auto dom = suite.zbasis().indices_of_bidegree(1, 0);
    Matrix inc = suite.inclusion(dom);
    Matrix dbar10 = suite.dbar() * inc;
    Matrix d10 = suite.d() * inc;
    auto embed = [&](const std::vector<Vec>& vs) {
      std::vector<Vec> g;
      for (const auto& v : vs) g.push_back(inc * v);
      return Subspace::span(suite.total(), g);
    };
    Subspace ker_dbar = embed(kernel_basis(dbar10));
    Subspace ker_d = embed(kernel_basis(d10));
    Subspace h10_d = solve(HarmonicQuery::bigraded(Family::D, 1, 0), suite);
    Subspace h10_dbar = solve(HarmonicQuery::bigraded(Family::Dbar, 1, 0), suite);
    bool ok = (ker_dbar == ker_d) && (ker_d == h10_d) && (h10_d == h10_dbar);
    out.push_back(make(kCells[17].id, kCells[17].statement, ok,
                       "dims: ker dbar = " + dims(ker_dbar) + ", ker d = " + dims(ker_d) +
                           ", H_d = " + dims(h10_d) + ", H_dbar = " + dims(h10_dbar)));
  }
  {
    Subspace img =
        apply(suite.star(), solve(HarmonicQuery::bigraded(Family::Dbar, 1, 0), suite));
    Subspace h21 = solve(HarmonicQuery::bigraded(Family::DelDbar, 2, 1), suite);
    out.push_back(make(kCells[18].id, kCells[18].statement, img == h21,
                       "dims: image = " + dims(img) + ", target = " + dims(h21)));
  }
  {
    Subspace img =
        apply(suite.star(), solve(HarmonicQuery::bigraded(Family::Dbar, 0, 1), suite));
    Subspace h12 = solve(HarmonicQuery::bigraded(Family::DelDbar, 1, 2), suite);
    out.push_back(make(kCells[19].id, kCells[19].statement, img == h12,
                       "dims: image = " + dims(img) + ", target = " + dims(h12)));
  }
  cell(20, q1, 2 * rep.d_pq[1][0]);
  return out;
}

std::vector<CheckResult> verify_almost_kahler(const ManifoldSpec& spec) {
  OperatorSuite suite(spec);
  return verify_almost_kahler(suite);
}

std::map<std::string, int> report_entries(const HarmonicReport& rep) {
  std::map<std::string, int> out;
  auto grid = [&](const char* name, const std::array<std::array<int, 3>, 3>& a) {
    for (int p = 0; p <= 2; ++p)
      for (int q = 0; q <= 2; ++q)
        out[std::string(name) + "[" + std::to_string(p) + "][" + std::to_string(q) + "]"] =
            a[p][q];
  };
  grid("dbar", rep.dbar);
  grid("del_dbar", rep.del_dbar);
  grid("d_pq", rep.d_pq);
  for (int k = 0; k <= 4; ++k) {
    out["deltabar_k[" + std::to_string(k) + "]"] = rep.deltabar_k[k];
    out["delta_deltabar_k[" + std::to_string(k) + "]"] = rep.delta_deltabar_k[k];
    out["ddc_k[" + std::to_string(k) + "]"] = rep.ddc_k[k];
    out["b[" + std::to_string(k) + "]"] = rep.betti.b[k];
  }
  out["h_minus_J"] = rep.h_minus_J;
  out["b_plus"] = rep.betti.b_plus;
  out["b_minus"] = rep.betti.b_minus;
  return out;
}

SweepResult sweep(const std::string& spec_text, const std::string& param,
                  const std::vector<Rational>& values) {
  if (values.size() < 2) throw std::invalid_argument("a sweep needs at least 2 sample values");
  SweepResult result;
  result.param = param;

  std::vector<const HarmonicReport*> valid;
  std::vector<Matrix> j_samples;
  bool all_ak = true;

  for (const Rational& v : values) {
    SweepSample sample;
    sample.value = v;
    try {
      ManifoldSpec spec = parse_spec_text(spec_text, {{param, v}});
      ValidationReport vr = validate(spec);
      if (!vr.all_pass()) {
        std::string why;
        for (const auto& it : vr.items)
          if (!it.pass) why += (why.empty() ? "" : "; ") + it.id + ": " + it.detail;
        sample.error = why;
      } else {
        OperatorSuite suite(spec);
        sample.report = full_report(suite);
        sample.valid = true;
        all_ak = all_ak && suite.almost_kahler();
        j_samples.push_back(spec.J);
      }
    } catch (const std::exception& e) {
      sample.error = e.what();
    }
    result.samples.push_back(std::move(sample));
  }

  for (const auto& s : result.samples)
    if (s.valid)
      for (const auto& [name, value] : report_entries(s.report))
        result.variation[name].insert(value);

  std::size_t valid_count = 0;
  for (const auto& s : result.samples) valid_count += s.valid ? 1 : 0;

  bool fixed_j = !j_samples.empty();
  for (const auto& j : j_samples) fixed_j = fixed_j && (j == j_samples.front());

  const std::string id = "sweep-ak-metric-independence";
  const std::string st =
      "almost Kahler metric sweep: h^k_deltabar, h^(p,q)_d, h^k_(delta+deltabar), "
      "h^k_(d+dc) constant across samples";
  if (valid_count < 2) {
    result.checks.push_back(not_applicable(id, st, "fewer than 2 valid samples"));
  } else if (!all_ak) {
    result.checks.push_back(not_applicable(id, st, "not all samples are almost Kahler"));
  } else if (!fixed_j) {
    result.checks.push_back(
        not_applicable(id, st, "J varies across samples (only metric sweeps are constrained)"));
  } else {
    bool ok = true;
    std::string w;
    for (const auto& [name, vals] : result.variation) {
      bool covered = name.rfind("deltabar_k", 0) == 0 || name.rfind("d_pq", 0) == 0 ||
                     name.rfind("delta_deltabar_k", 0) == 0 || name.rfind("ddc_k", 0) == 0;
      if (covered && vals.size() > 1) {
        ok = false;
        w += (w.empty() ? "" : "; ") + name + " attains " + std::to_string(vals.size()) +
             " values";
      }
    }
    result.checks.push_back(make(id, st, ok, w));
  }
  return result;
}

}  // namespace invharm
