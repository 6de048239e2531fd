#include "fracframes/frame.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <iostream>
#include <numbers>
#include <sstream>

#include <Eigen/SVD>

#ifdef FRACFRAMES_HAVE_OPENMP
#include <omp.h>
#endif

#include "fracframes/error.hpp"

namespace fracframes::frame {

namespace {

constexpr double kExponentTol = 1e-14;

// Runs fn(begin, end) over contiguous chunks of [0, n), one per thread.
// Exceptions thrown inside a chunk are rethrown on the calling thread.
template <typename Fn>
void parallel_chunks(std::size_t n, Fn&& fn) {
#ifdef FRACFRAMES_HAVE_OPENMP
  const int threads = std::max(1, std::min<int>(omp_get_max_threads(), static_cast<int>(n / 64) + 1));
  if (threads > 1) {
    std::vector<std::exception_ptr> errors(threads);
#pragma omp parallel for num_threads(threads) schedule(static)
    for (int t = 0; t < threads; ++t) {
      const std::size_t begin = n * t / threads;
      const std::size_t end = n * (t + 1) / threads;
      try {
        fn(begin, end);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    return;
  }
#endif
  fn(std::size_t{0}, n);
}

const char* kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::WeightedJacobi: return "Q";
    case FamilyKind::ExtendedJacobi: return "Ptilde";
    case FamilyKind::WeightedZernike: return "W";
    case FamilyKind::ExtendedZernike: return "Ztilde";
  }
  return "?";
}

Eigen::MatrixXd evaluate_1d(const BasisFamily& fam, int n_max, const Points& points) {
  const auto rows = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(rows, n_max + 1);
  std::vector<double> ys(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) ys[i] = fam.interval.to_reference(points.x[i]);

  if (fam.kind == FamilyKind::WeightedJacobi) {
    parallel_chunks(ys.size(), [&](std::size_t begin, std::size_t end) {
      std::vector<double> buf(n_max + 1);
      for (std::size_t i = begin; i < end; ++i) {
        const double y = ys[i];
        if (std::abs(y) >= 1.0) continue;
        basis1d::jacobi_p_all(n_max, {fam.a, fam.a}, y, buf);
        const double w = std::pow((1.0 - y) * (1.0 + y), fam.a);
        for (int n = 0; n <= n_max; ++n) out(static_cast<Eigen::Index>(i), n) = w * buf[n];
      }
    });
  } else {
    parallel_chunks(ys.size(), [&](std::size_t begin, std::size_t end) {
      if (begin == end) return;
      const std::span<const double> chunk(ys.data() + begin, end - begin);
      const Eigen::MatrixXd block = basis1d::extended_p_batch(n_max, {fam.a, fam.s}, chunk);
      out.middleRows(static_cast<Eigen::Index>(begin), block.rows()) = block;
    });
  }
  for (int n = 0; n < std::min(fam.degree_offset, n_max + 1); ++n) out.col(n).setZero();
  return out;
}

Eigen::MatrixXd evaluate_2d(const BasisFamily& fam, int n_max, const Points& points) {
  const std::size_t count = points.size();
  const double f = fam.scale.factor;
  std::vector<double> radius(count);
  for (std::size_t i = 0; i < count; ++i) radius[i] = f * std::hypot(points.x[i], points.y[i]);

  std::vector<double> unique = radius;
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  Eigen::MatrixXd radial(static_cast<Eigen::Index>(unique.size()), n_max + 1);
  parallel_chunks(unique.size(), [&](std::size_t begin, std::size_t end) {
    if (begin == end) return;
    const std::span<const double> chunk(unique.data() + begin, end - begin);
    const Eigen::MatrixXd block = fam.kind == FamilyKind::WeightedZernike
                                      ? basis2d::weighted_w_radial(n_max, fam.m, fam.a, chunk)
                                      : basis2d::extended_z_radial(n_max, fam.m, fam.s, chunk);
    radial.middleRows(static_cast<Eigen::Index>(begin), block.rows()) = block;
  });

  Eigen::MatrixXd out(static_cast<Eigen::Index>(count), n_max + 1);
  for (std::size_t i = 0; i < count; ++i) {
    const auto idx = std::lower_bound(unique.begin(), unique.end(), radius[i]) - unique.begin();
    double trig = 1.0;
    if (fam.m > 0) {
      const double theta = std::atan2(points.y[i], points.x[i]);
      trig = fam.j == 1 ? std::cos(fam.m * theta) : std::sin(fam.m * theta);
    }
    out.row(static_cast<Eigen::Index>(i)) = trig * radial.row(idx);
  }
  for (int n = 0; n < std::min(fam.degree_offset, n_max + 1); ++n) out.col(n).setZero();
  return out;
}

bool is_zero(double x) { return std::abs(x) <= kExponentTol; }

}  // namespace

BasisFamily BasisFamily::weighted_jacobi(double a, basis1d::Interval interval, int offset) {
  BasisFamily f;
  f.kind = FamilyKind::WeightedJacobi;
  f.a = a;
  f.interval = interval;
  f.degree_offset = offset;
  f.validate();
  return f;
}

BasisFamily BasisFamily::extended_jacobi(double a, double s, basis1d::Interval interval, int offset) {
  BasisFamily f;
  f.kind = FamilyKind::ExtendedJacobi;
  f.a = a;
  f.s = s;
  f.interval = interval;
  f.degree_offset = offset;
  f.validate();
  return f;
}

BasisFamily BasisFamily::weighted_zernike(double b, basis2d::RadialScale scale, int m, int j, int offset) {
  BasisFamily f;
  f.kind = FamilyKind::WeightedZernike;
  f.a = b;
  f.scale = scale;
  f.m = m;
  f.j = j;
  f.degree_offset = offset;
  f.validate();
  return f;
}

BasisFamily BasisFamily::extended_zernike(double s, basis2d::RadialScale scale, int m, int j, int offset) {
  BasisFamily f;
  f.kind = FamilyKind::ExtendedZernike;
  f.a = s;
  f.s = s;
  f.scale = scale;
  f.m = m;
  f.j = j;
  f.degree_offset = offset;
  f.validate();
  return f;
}

bool BasisFamily::extended() const noexcept {
  return kind == FamilyKind::ExtendedJacobi || kind == FamilyKind::ExtendedZernike;
}

int BasisFamily::dim() const noexcept {
  return (kind == FamilyKind::WeightedJacobi || kind == FamilyKind::ExtendedJacobi) ? 1 : 2;
}

double BasisFamily::length_scale() const noexcept {
  return dim() == 1 ? interval.half_width() : 1.0 / scale.factor;
}

void BasisFamily::validate() const {
  if (degree_offset != 0 && degree_offset != 1) {
    throw ParameterError(describe() + ": degree offset must be 0 or 1");
  }
  switch (kind) {
    case FamilyKind::WeightedJacobi:
      basis1d::JacobiParams{a, a}.validate();
      break;
    case FamilyKind::ExtendedJacobi:
      basis1d::ExtendedParams{a, s}.validate(degree_offset);
      break;
    case FamilyKind::WeightedZernike:
      basis2d::ZernikeIndex{m, m, j}.validate();
      if (!(a > -1.0)) throw ParameterError(describe() + ": weight exponent must exceed -1");
      break;
    case FamilyKind::ExtendedZernike:
      basis2d::ZernikeIndex{m, m, j}.validate();
      if (!(s > -1.0 && s < 1.0) || is_zero(s)) {
        throw ParameterError(describe() + ": exponent must lie in (-1, 1) \\ {0}");
      }
      if (a != s) throw ParameterError(describe() + ": only b = s extended Zernike functions exist");
      break;
  }
}

std::string BasisFamily::describe() const {
  std::ostringstream os;
  os << kind_name(kind);
  if (kind == FamilyKind::WeightedJacobi || kind == FamilyKind::WeightedZernike) {
    os << "(" << a << ")";
  } else {
    os << "(" << a << "," << s << ")";
  }
  if (dim() == 1) {
    os << " on [" << interval.a << ", " << interval.b << "]";
  } else {
    os << " m=" << m << " j=" << j << " scale " << scale.factor;
  }
  if (degree_offset) os << " from degree " << degree_offset;
  return os.str();
}

Points Points::line(std::vector<double> xs) {
  Points p;
  p.dim = 1;
  p.x = std::move(xs);
  return p;
}

Points Points::plane(std::vector<double> xs, std::vector<double> ys) {
  if (xs.size() != ys.size()) throw ShapeError("Points::plane: x and y lengths differ");
  Points p;
  p.dim = 2;
  p.x = std::move(xs);
  p.y = std::move(ys);
  return p;
}

Eigen::MatrixXd evaluate_family(const BasisFamily& family, int n_max, const Points& points) {
  if (n_max < 0) return Eigen::MatrixXd(static_cast<Eigen::Index>(points.size()), 0);
  if (family.dim() != points.dim) {
    throw ShapeError(family.describe() + ": family dimension does not match the points");
  }
  try {
    return family.dim() == 1 ? evaluate_1d(family, n_max, points) : evaluate_2d(family, n_max, points);
  } catch (const SingularPointError& e) {
    throw SingularPointError(family.describe() + ": " + e.what());
  }
}

SumSpace::SumSpace(std::vector<BasisFamily> families, int n_columns) : families_(std::move(families)) {
  if (families_.empty()) throw ParameterError("SumSpace: no families");
  if (n_columns < 0) throw ParameterError("SumSpace: negative column count");
  const int d = families_.front().dim();
  for (const auto& f : families_) {
    f.validate();
    if (f.dim() != d) throw ParameterError("SumSpace: families mix 1D and 2D");
  }
  columns_.reserve(n_columns);
  for (int degree = 0; static_cast<int>(columns_.size()) < n_columns; ++degree) {
    for (int pass = 0; pass < 2; ++pass) {
      const bool want_extended = pass == 0;
      for (int f = 0; f < static_cast<int>(families_.size()); ++f) {
        const auto& fam = families_[f];
        if (fam.extended() != want_extended || degree < fam.degree_offset) continue;
        if (static_cast<int>(columns_.size()) == n_columns) return;
        columns_.push_back({f, degree});
      }
    }
  }
}

int SumSpace::dim() const noexcept { return families_.empty() ? 1 : families_.front().dim(); }

int SumSpace::max_degree(int f) const {
  int best = -1;
  for (const auto& c : columns_) {
    if (c.family == f) best = std::max(best, c.degree);
  }
  return best;
}

int SumSpace::count(int f) const {
  return static_cast<int>(std::count_if(columns_.begin(), columns_.end(), [f](const Column& c) { return c.family == f; }));
}

SumSpace SumSpace::truncated(int n_columns) const {
  if (n_columns > size()) throw ParameterError("SumSpace::truncated: more columns than the space holds");
  SumSpace out = *this;
  out.columns_.resize(n_columns);
  return out;
}

OperatorSpec OperatorSpec::identity() { return {{{1.0, 0.0}}}; }

OperatorSpec OperatorSpec::shifted(double t) { return {{{1.0, 0.0}, {1.0, t}}}; }

OperatorSpec OperatorSpec::fractional(double t, double lambda) { return {{{lambda, t}}}; }

void OperatorSpec::validate() const {
  if (terms.empty()) throw ParameterError("OperatorSpec: no terms");
  for (const auto& term : terms) {
    if (!(term.t >= 0.0 && term.t <= 1.0) || !std::isfinite(term.lambda)) {
      std::ostringstream os;
      os << "OperatorSpec: exponent " << term.t << " outside [0, 1]";
      throw ParameterError(os.str());
    }
  }
}

std::string OperatorSpec::describe() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k) os << " + ";
    os << terms[k].lambda;
    if (terms[k].t != 0.0) os << " (-Delta)^" << terms[k].t;
    else os << " I";
  }
  return os.str();
}

ImageTerm family_image(const BasisFamily& family, double t, double lambda) {
  if (is_zero(t)) return {lambda, family};
  const double coeff = lambda * std::pow(family.length_scale(), -2.0 * t);
  BasisFamily img = family;
  std::ostringstream os;
  switch (family.kind) {
    case FamilyKind::WeightedJacobi:
      img.kind = FamilyKind::ExtendedJacobi;
      img.s = t;
      break;
    case FamilyKind::ExtendedJacobi: {
      const double shifted = family.s + t;
      if (is_zero(shifted)) {
        img.kind = FamilyKind::WeightedJacobi;
        img.s = 0.0;
      } else {
        img.s = shifted;
      }
      break;
    }
    case FamilyKind::WeightedZernike:
      if (std::abs(family.a - t) > kExponentTol) {
        os << family.describe() << ": (-Delta)^" << t << " image is only available when the weight equals the exponent";
        throw ParameterError(os.str());
      }
      img.kind = FamilyKind::ExtendedZernike;
      img.a = t;
      img.s = t;
      break;
    case FamilyKind::ExtendedZernike:
      if (!is_zero(family.s + t)) {
        os << family.describe() << ": (-Delta)^" << t << " image would need a b != s extended Zernike function";
        throw ParameterError(os.str());
      }
      img.kind = FamilyKind::WeightedZernike;
      img.s = 0.0;
      break;
  }
  try {
    img.validate();
  } catch (const ParameterError& e) {
    os << "inadmissible exponent in the (-Delta)^" << t << " image of " << family.describe() << ": " << e.what();
    throw ParameterError(os.str());
  }
  return {coeff, img};
}

SpaceImage operator_image(const SumSpace& space, const OperatorSpec& op) {
  op.validate();
  SpaceImage image;
  image.source = space;
  for (const auto& fam : space.families()) {
    std::vector<ImageTerm> terms;
    for (const auto& term : op.terms) terms.push_back(family_image(fam, term.t, term.lambda));
    image.terms.push_back(std::move(terms));
  }
  return image;
}

SpaceImage identity_image(const SumSpace& space) { return operator_image(space, OperatorSpec::identity()); }

Points collocation_grid_1d(const std::vector<basis1d::Interval>& intervals, int pts_per_segment, double eps_offset,
                           const std::vector<basis1d::Interval>& pads) {
  if (pts_per_segment < 1) throw ParameterError("collocation_grid_1d: need at least one point per segment");
  if (!(eps_offset > 0.0)) throw ParameterError("collocation_grid_1d: eps_offset must be positive");
  std::vector<basis1d::Interval> segments = intervals;
  segments.insert(segments.end(), pads.begin(), pads.end());
  if (segments.empty()) throw ParameterError("collocation_grid_1d: no segments");
  std::vector<basis1d::Interval> sorted = segments;
  std::sort(sorted.begin(), sorted.end(), [](const auto& l, const auto& r) { return l.a < r.a; });
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (sorted[k].a < sorted[k - 1].b) {
      std::ostringstream os;
      os << "collocation_grid_1d: segments [" << sorted[k - 1].a << ", " << sorted[k - 1].b << "] and ["
         << sorted[k].a << ", " << sorted[k].b << "] overlap";
      throw ParameterError(os.str());
    }
  }
  std::vector<double> xs;
  xs.reserve(segments.size() * pts_per_segment);
  for (const auto& seg : sorted) {
    if (!(2.0 * eps_offset < seg.b - seg.a)) {
      std::ostringstream os;
      os << "collocation_grid_1d: eps_offset " << eps_offset << " too large for [" << seg.a << ", " << seg.b << "]";
      throw ParameterError(os.str());
    }
    const double lo = seg.a + eps_offset;
    const double hi = seg.b - eps_offset;
    if (pts_per_segment == 1) {
      xs.push_back(0.5 * (lo + hi));
      continue;
    }
    for (int i = 0; i < pts_per_segment; ++i) {
      xs.push_back(lo + (hi - lo) * i / (pts_per_segment - 1));
    }
  }
  return Points::line(std::move(xs));
}

Points collocation_grid_2d(const std::vector<double>& radial_breaks, int pts_per_segment, double eps_offset,
                           int n_angles) {
  if (radial_breaks.size() < 2) throw ParameterError("collocation_grid_2d: need at least two radial breaks");
  if (!(radial_breaks.front() >= 0.0)) throw ParameterError("collocation_grid_2d: radii must be nonnegative");
  if (n_angles < 1) throw ParameterError("collocation_grid_2d: need at least one angle");
  std::vector<basis1d::Interval> segments;
  for (std::size_t k = 1; k < radial_breaks.size(); ++k) {
    if (!(radial_breaks[k] > radial_breaks[k - 1])) {
      throw ParameterError("collocation_grid_2d: radial breaks must be increasing");
    }
    segments.emplace_back(radial_breaks[k - 1], radial_breaks[k]);
  }
  const Points radial = collocation_grid_1d(segments, pts_per_segment, eps_offset);
  std::vector<double> xs;
  std::vector<double> ys;
  xs.reserve(radial.size() * n_angles);
  ys.reserve(radial.size() * n_angles);
  for (double r : radial.x) {
    for (int l = 0; l < n_angles; ++l) {
      const double theta = 2.0 * std::numbers::pi * l / n_angles;
      xs.push_back(r * std::cos(theta));
      ys.push_back(r * std::sin(theta));
    }
  }
  return Points::plane(std::move(xs), std::move(ys));
}

Eigen::MatrixXd assemble_matrix(const SpaceImage& image, const Points& points) {
  const SumSpace& space = image.source;
  if (space.dim() != points.dim) throw ShapeError("assemble: space and points differ in dimension");
  const auto rows = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd X = Eigen::MatrixXd::Zero(rows, space.size());
  const auto& columns = space.columns();
  for (int f = 0; f < static_cast<int>(space.families().size()); ++f) {
    const int n_max = space.max_degree(f);
    if (n_max < 0) continue;
    for (const auto& term : image.terms[f]) {
      const Eigen::MatrixXd values = evaluate_family(term.family, n_max, points);
      for (int c = 0; c < space.size(); ++c) {
        if (columns[c].family != f) continue;
        X.col(c) += term.coeff * values.col(columns[c].degree);
      }
    }
  }
  if (!X.allFinite()) {
    for (Eigen::Index c = 0; c < X.cols(); ++c) {
      for (Eigen::Index i = 0; i < X.rows(); ++i) {
        if (!std::isfinite(X(i, c))) {
          std::ostringstream os;
          os.precision(17);
          os << "assemble: non-finite entry at point " << i << " (x = " << points.x[i];
          if (points.dim == 2) os << ", y = " << points.y[i];
          const auto& col = columns[c];
          os << "), column " << c << " = " << space.families()[col.family].describe() << " degree " << col.degree;
          throw SingularPointError(os.str());
        }
      }
    }
  }
  return X;
}

LsSystem::LsSystem(Eigen::MatrixXd matrix, Points points) : matrix_(std::move(matrix)), points_(std::move(points)) {
  if (static_cast<std::size_t>(matrix_.rows()) != points_.size()) {
    throw ShapeError("LsSystem: matrix rows do not match the number of points");
  }
  factor();
}

LsSystem::LsSystem(Eigen::MatrixXd matrix) : matrix_(std::move(matrix)) { factor(); }

void LsSystem::factor() {
  if (matrix_.cols() == 0) return;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(matrix_, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success) throw ConvergenceError("LsSystem: SVD failed");
  u_ = svd.matrixU();
  sigma_ = svd.singularValues();
  v_ = svd.matrixV();
}

TsvdReport LsSystem::solve(const Eigen::VectorXd& y, std::optional<double> eps) const {
  if (y.size() != matrix_.rows()) {
    std::ostringstream os;
    os << "tsvd_solve: right-hand side has " << y.size() << " entries, system has " << matrix_.rows() << " rows";
    throw ShapeError(os.str());
  }
  TsvdReport rep;
  rep.coeffs = Eigen::VectorXd::Zero(matrix_.cols());
  const double sigma_max = sigma_.size() ? sigma_(0) : 0.0;
  if (eps && !(*eps > 0.0)) throw ParameterError("tsvd_solve: eps must be positive");
  rep.cutoff = eps ? *eps : kDefaultRelativeCutoff * sigma_max;
  int rank = 0;
  while (rank < sigma_.size() && sigma_(rank) >= rep.cutoff && sigma_(rank) > 0.0) ++rank;
  rep.kept_rank = rank;
  if (rank == 0) {
    rep.all_truncated = matrix_.cols() > 0;
    if (rep.all_truncated) std::cerr << "warning: tsvd_solve: every singular value is below the cutoff\n";
  } else {
    const Eigen::VectorXd proj = u_.leftCols(rank).transpose() * y;
    rep.coeffs = v_.leftCols(rank) * proj.cwiseQuotient(sigma_.head(rank));
  }
  rep.residual = (matrix_ * rep.coeffs - y).norm();
  rep.coeff_inf_norm = rep.coeffs.size() ? rep.coeffs.cwiseAbs().maxCoeff() : 0.0;
  return rep;
}

LsSystem assemble(const SpaceImage& image, const Points& points) {
  const auto m = static_cast<long>(points.size());
  const long n = image.source.size();
  if (m < n) {
    std::ostringstream os;
    os << "assemble: " << m << " points cannot determine " << n << " coefficients";
    throw ShapeError(os.str());
  }
  if (m < 4 * n) std::cerr << "warning: assemble: oversampling " << m << " / " << n << " is below 4\n";
  return LsSystem(assemble_matrix(image, points), points);
}

TsvdReport tsvd_solve(const LsSystem& system, const Eigen::VectorXd& y, std::optional<double> eps) {
  return system.solve(y, eps);
}

Expansion expand(const SumSpace& space, const OperatorSpec& op, const Eigen::VectorXd& f_samples,
                 const Points& points, std::optional<double> eps) {
  const LsSystem system = assemble(operator_image(space, op), points);
  Expansion out;
  out.report = system.solve(f_samples, eps);
  out.coeffs = out.report.coeffs;
  out.rhs_linf_error = (system.matrix() * out.coeffs - f_samples).cwiseAbs().maxCoeff();
  return out;
}

}  // namespace fracframes::frame
