#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fracframes/basis1d.hpp"
#include "fracframes/basis2d.hpp"

namespace fracframes::frame {

enum class FamilyKind { WeightedJacobi, ExtendedJacobi, WeightedZernike, ExtendedZernike };

/// One affine-mapped (1D) or radially dilated (2D) basis family.
///   WeightedJacobi   Q^{(a,a)} on `interval`
///   ExtendedJacobi   Ptilde^{(a,s)} on `interval`
///   WeightedZernike  W^{(a)}_{n,m,j} at (factor x, factor y)
///   ExtendedZernike  Ztilde^{(s,s)}_{n,m,j} at (factor x, factor y); a == s
/// For Zernike families the degree is the radial Jacobi degree (n - m) / 2.
struct BasisFamily {
  FamilyKind kind = FamilyKind::WeightedJacobi;
  double a = 0.0;
  double s = 0.0;
  basis1d::Interval interval{};
  basis2d::RadialScale scale{};
  int m = 0;
  int j = 1;
  int degree_offset = 0;

  static BasisFamily weighted_jacobi(double a, basis1d::Interval interval, int offset = 0);
  static BasisFamily extended_jacobi(double a, double s, basis1d::Interval interval, int offset = 0);
  static BasisFamily weighted_zernike(double b, basis2d::RadialScale scale, int m = 0, int j = 1, int offset = 0);
  static BasisFamily extended_zernike(double s, basis2d::RadialScale scale, int m = 0, int j = 1, int offset = 0);

  [[nodiscard]] bool extended() const noexcept;
  [[nodiscard]] int dim() const noexcept;
  /// Length scale L with f(x) = g(x / L) up to translation: the half-width in
  /// 1D and 1 / factor in 2D. (-Delta)^t of the family picks up L^{-2t}.
  [[nodiscard]] double length_scale() const noexcept;
  void validate() const;
  [[nodiscard]] std::string describe() const;
  bool operator==(const BasisFamily&) const = default;
};

/// Collocation points in 1D (y empty) or 2D.
struct Points {
  int dim = 1;
  std::vector<double> x;
  std::vector<double> y;

  [[nodiscard]] std::size_t size() const noexcept { return x.size(); }
  static Points line(std::vector<double> xs);
  static Points plane(std::vector<double> xs, std::vector<double> ys);
};

/// Degrees 0..n_max of a family at every point (rows points, columns degrees).
/// Columns below the family's degree offset are left as zero.
Eigen::MatrixXd evaluate_family(const BasisFamily& family, int n_max, const Points& points);

struct Column {
  int family = 0;
  int degree = 0;
  bool operator==(const Column&) const = default;
};

/// Ordered families truncated to the first N columns of the degree-major
/// order: for degree 0, 1, 2, ... the extended families in declaration order,
/// then the weighted families in declaration order. A family contributes
/// from its degree offset on.
class SumSpace {
 public:
  SumSpace() = default;
  SumSpace(std::vector<BasisFamily> families, int n_columns);

  [[nodiscard]] const std::vector<BasisFamily>& families() const noexcept { return families_; }
  [[nodiscard]] const std::vector<Column>& columns() const noexcept { return columns_; }
  [[nodiscard]] int size() const noexcept { return static_cast<int>(columns_.size()); }
  [[nodiscard]] int dim() const noexcept;
  /// Highest degree used by family f, or -1 when it has no column.
  [[nodiscard]] int max_degree(int f) const;
  /// Number of columns contributed by family f.
  [[nodiscard]] int count(int f) const;
  [[nodiscard]] SumSpace truncated(int n_columns) const;

 private:
  std::vector<BasisFamily> families_;
  std::vector<Column> columns_;
};

/// One term lambda (-Delta)^t; t = 0 is the identity.
struct OperatorTerm {
  double lambda = 1.0;
  double t = 0.0;
};

struct OperatorSpec {
  std::vector<OperatorTerm> terms;

  static OperatorSpec identity();
  /// I + (-Delta)^t
  static OperatorSpec shifted(double t);
  static OperatorSpec fractional(double t, double lambda = 1.0);
  void validate() const;
  [[nodiscard]] std::string describe() const;
};

struct ImageTerm {
  double coeff = 1.0;
  BasisFamily family;
};

/// Image of a single family under lambda (-Delta)^t, as a linear combination of families.
ImageTerm family_image(const BasisFamily& family, double t, double lambda = 1.0);

/// The operator image of a sum space: column c of L S is
/// sum over terms[f] of coeff * family(degree) with (f, degree) = columns()[c].
struct SpaceImage {
  SumSpace source;
  std::vector<std::vector<ImageTerm>> terms;
};

SpaceImage operator_image(const SumSpace& space, const OperatorSpec& op);

/// The identity image, for assembling S itself.
SpaceImage identity_image(const SumSpace& space);

/// Equally spaced points on every segment, inset by eps_offset from both ends.
/// Pads are appended as further segments; segments may touch but not overlap.
Points collocation_grid_1d(const std::vector<basis1d::Interval>& intervals, int pts_per_segment,
                           double eps_offset, const std::vector<basis1d::Interval>& pads = {});

/// Inset radial points on each [breaks[i], breaks[i+1]] crossed with n_angles
/// uniform angles in [0, 2 pi). Points are ordered radius-major.
Points collocation_grid_2d(const std::vector<double>& radial_breaks, int pts_per_segment, double eps_offset,
                           int n_angles);

/// Dense M x N matrix with X(i, c) = (L S)_c(x_i), built once for the full
/// space; smaller truncations are its leading columns.
Eigen::MatrixXd assemble_matrix(const SpaceImage& image, const Points& points);

inline constexpr double kDefaultRelativeCutoff = 1e-14;

struct TsvdReport {
  Eigen::VectorXd coeffs;
  int kept_rank = 0;
  double cutoff = 0.0;
  double residual = 0.0;
  double coeff_inf_norm = 0.0;
  bool all_truncated = false;
};

/// Least-squares system with its SVD, factored on construction.
class LsSystem {
 public:
  LsSystem(Eigen::MatrixXd matrix, Points points);
  /// A system without recorded collocation points.
  explicit LsSystem(Eigen::MatrixXd matrix);

  [[nodiscard]] const Eigen::MatrixXd& matrix() const noexcept { return matrix_; }
  [[nodiscard]] const Points& points() const noexcept { return points_; }
  [[nodiscard]] const Eigen::VectorXd& singular_values() const noexcept { return sigma_; }
  [[nodiscard]] Eigen::Index rows() const noexcept { return matrix_.rows(); }
  [[nodiscard]] Eigen::Index cols() const noexcept { return matrix_.cols(); }

  /// eps-truncated pseudoinverse solve keeping sigma_i >= eps. Without eps the
  /// cutoff is kDefaultRelativeCutoff * sigma_max.
  [[nodiscard]] TsvdReport solve(const Eigen::VectorXd& y, std::optional<double> eps = std::nullopt) const;

 private:
  void factor();

  Eigen::MatrixXd matrix_;
  Points points_;
  Eigen::MatrixXd u_;
  Eigen::VectorXd sigma_;
  Eigen::MatrixXd v_;
};

LsSystem assemble(const SpaceImage& image, const Points& points);

TsvdReport tsvd_solve(const LsSystem& system, const Eigen::VectorXd& y, std::optional<double> eps = std::nullopt);

struct Expansion {
  Eigen::VectorXd coeffs;
  TsvdReport report;
  /// max_i |(L S u)(x_i) - f(x_i)|
  double rhs_linf_error = 0.0;
};

/// Expand sampled f in the image space L S; the coefficients read off the solution in S.
Expansion expand(const SumSpace& space, const OperatorSpec& op, const Eigen::VectorXd& f_samples,
                 const Points& points, std::optional<double> eps = std::nullopt);

}  // namespace fracframes::frame
