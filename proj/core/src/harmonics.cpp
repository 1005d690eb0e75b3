#include "invharm/harmonics.hpp"

#include <cstdio>
#include <stdexcept>

namespace invharm {

namespace {

Subspace kernel_on_domain(const OperatorSuite& suite, const std::vector<std::size_t>& domain,
                          const std::vector<const Matrix*>& constraints) {
  Matrix inc = suite.inclusion(domain);
  std::vector<Matrix> rows;
  rows.reserve(constraints.size());
  for (const Matrix* c : constraints) rows.push_back(*c * inc);
  std::vector<Vec> kernel = kernel_basis(vstack(rows));
  std::vector<Vec> global;
  global.reserve(kernel.size());
  for (const auto& v : kernel) global.push_back(inc * v);
  return Subspace::span(suite.total(), global);
}

void check_range(int v, int lo, int hi, const char* what) {
  if (v < lo || v > hi)
    throw std::invalid_argument(std::string(what) + " out of range for dimension 4");
}

}  // namespace

Subspace solve(const HarmonicQuery& query, const OperatorSuite& suite) {
  if (suite.n() != 4)
    throw std::invalid_argument("harmonic systems are pinned to dimension 4 (star placement)");
  const auto& zb = suite.zbasis();

  auto bigraded_domain = [&](int p, int q) {
    check_range(p, 0, 2, "p");
    check_range(q, 0, 2, "q");
    return zb.indices_of_bidegree(p, q);
  };
  auto graded_domain = [&](int k) {
    check_range(k, 0, 4, "k");
    return zb.indices_of_degree(k);
  };

  // Compositions used on the right-hand side of the systems.
  switch (query.family) {
    case Family::Dbar: {
      Matrix second = suite.del() * suite.star();
      return kernel_on_domain(suite, bigraded_domain(query.p, query.q),
                              {&suite.dbar(), &second});
    }
    case Family::DelDbar: {
      Matrix third = suite.del() * suite.dbar() * suite.star();
      return kernel_on_domain(suite, bigraded_domain(query.p, query.q),
                              {&suite.del(), &suite.dbar(), &third});
    }
    case Family::Deltabar: {
      Matrix second = suite.delta() * suite.star();
      return kernel_on_domain(suite, graded_domain(query.k), {&suite.deltabar(), &second});
    }
    case Family::DeltaDeltabar: {
      Matrix third = suite.delta() * suite.deltabar() * suite.star();
      return kernel_on_domain(suite, graded_domain(query.k),
                              {&suite.delta(), &suite.deltabar(), &third});
    }
    case Family::D: {
      Matrix second = suite.d() * suite.star();
      return kernel_on_domain(suite, bigraded_domain(query.p, query.q),
                              {&suite.d(), &second});
    }
    case Family::DDc: {
      Matrix third = suite.dc() * suite.d() * suite.star();
      return kernel_on_domain(suite, graded_domain(query.k),
                              {&suite.d(), &suite.dc(), &third});
    }
    case Family::AntiInvariant: {
      std::vector<std::size_t> domain = zb.indices_of_bidegree(2, 0);
      for (auto i : zb.indices_of_bidegree(0, 2)) domain.push_back(i);
      Matrix second = suite.d() * suite.star();
      return kernel_on_domain(suite, domain, {&suite.d(), &second});
    }
    case Family::DeRham: {
      check_range(query.k, 0, 4, "k");
      const auto& rb = suite.real().basis();
      std::vector<std::size_t> domain = rb.indices_of_degree(query.k);
      Matrix inc(rb.size(), domain.size());
      for (std::size_t j = 0; j < domain.size(); ++j) inc(domain[j], j) = Scalar(1);
      Matrix closed = suite.real().d() * inc;
      Matrix coclosed = suite.real().d() * (suite.real().star() * inc);
      std::vector<Vec> kernel = kernel_basis(vstack({closed, coclosed}));
      return Subspace::span(domain.size(), kernel);
    }
  }
  throw std::invalid_argument("unknown harmonic family");
}

BettiNumbers betti(const OperatorSuite& suite) {
  if (suite.n() != 4) throw std::invalid_argument("Betti table is pinned to dimension 4");
  BettiNumbers out;
  const auto& real = suite.real();

  for (int k = 0; k <= 4; ++k) {
    Subspace h = solve(HarmonicQuery::graded(Family::DeRham, k), suite);
    out.b[k] = int(h.dim());
    // invariant cohomology must agree (fails only without unimodularity)
    std::size_t kerd = real.basis().degree_size(k) - rank(real.d_block(k));
    std::size_t imd = (k == 0) ? 0 : rank(real.d_block(k - 1));
    if (out.b[k] != int(kerd - imd))
      throw std::logic_error("harmonic and cohomological Betti numbers disagree");
  }

  Subspace h2 = solve(HarmonicQuery::graded(Family::DeRham, 2), suite);
  auto [plus, minus] = eigensplit_involution(real.star_block(2));
  out.b_plus = int(intersect(h2, plus).dim());
  out.b_minus = int(intersect(h2, minus).dim());
  if (out.b_plus + out.b_minus != out.b[2])
    throw std::logic_error("star eigensplit does not decompose the harmonic 2-forms");
  return out;
}

HarmonicReport full_report(const OperatorSuite& suite) {
  HarmonicReport rep;
  rep.name = suite.spec().name;
  rep.digest = digest_of(suite.spec());
  rep.integrable = suite.integrable();
  rep.almost_kahler = suite.almost_kahler();
  rep.unimodular = true;  // construction rejects non-unimodular specs

  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q) {
      rep.dbar[p][q] = int(solve(HarmonicQuery::bigraded(Family::Dbar, p, q), suite).dim());
      rep.del_dbar[p][q] =
          int(solve(HarmonicQuery::bigraded(Family::DelDbar, p, q), suite).dim());
      rep.d_pq[p][q] = int(solve(HarmonicQuery::bigraded(Family::D, p, q), suite).dim());
    }
  for (int k = 0; k <= 4; ++k) {
    rep.deltabar_k[k] = int(solve(HarmonicQuery::graded(Family::Deltabar, k), suite).dim());
    rep.delta_deltabar_k[k] =
        int(solve(HarmonicQuery::graded(Family::DeltaDeltabar, k), suite).dim());
    rep.ddc_k[k] = int(solve(HarmonicQuery::graded(Family::DDc, k), suite).dim());
  }

  Subspace anti = solve(HarmonicQuery::graded(Family::AntiInvariant, 2), suite);
  rep.h_minus_J = int(anti.dim());

  // Real cross-check: J-anti-invariant harmonic 2-forms over the real basis
  // must have the same dimension (the complex space is conjugation-stable).
  {
    const auto& rb = suite.real().basis();
    std::vector<std::size_t> domain = rb.indices_of_degree(2);
    Matrix inc(rb.size(), domain.size());
    for (std::size_t j = 0; j < domain.size(); ++j) inc(domain[j], j) = Scalar(1);
    Matrix anti_inv = (suite.real().j_action() + Matrix::identity(rb.size())) * inc;
    Matrix closed = suite.real().d() * inc;
    Matrix coclosed = suite.real().d() * (suite.real().star() * inc);
    std::size_t real_dim = kernel_basis(vstack({anti_inv, closed, coclosed})).size();
    if (int(real_dim) != rep.h_minus_J)
      throw std::logic_error("real and complex anti-invariant harmonic dimensions differ");
  }

  rep.betti = betti(suite);
  return rep;
}

HarmonicReport full_report(const ManifoldSpec& spec) {
  OperatorSuite suite(spec);
  return full_report(suite);
}

std::string digest_of(const ManifoldSpec& spec) {
  std::string blob = std::to_string(spec.dim) + "|";
  for (const auto& r : spec.c) blob += to_string(r) + ",";
  blob += "|";
  for (std::size_t i = 0; i < spec.J.rows(); ++i)
    for (std::size_t j = 0; j < spec.J.cols(); ++j) blob += to_string(spec.J(i, j)) + ",";
  blob += "|";
  for (std::size_t i = 0; i < spec.g.rows(); ++i)
    for (std::size_t j = 0; j < spec.g.cols(); ++j) blob += to_string(spec.g(i, j)) + ",";

  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char ch : blob) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace invharm
