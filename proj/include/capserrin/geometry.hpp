#pragma once

#include <Eigen/Core>
#include <array>
#include <utility>
#include <vector>

#include "capserrin/types.hpp"

namespace capserrin {

/// Spherical-cap parameters in the upper half disk (n = 2 unless stated).
/// The cap ball has center p = a * sqrt(1 + (n c)^2) and radius r = n c,
/// where a = (cos a_angle, sin a_angle) on the unit circle. The relation
/// |p|^2 = 1 + r^2 makes the cap circle meet the unit circle orthogonally.
struct CapSpec {
  double a_angle = 0.0;  ///< contact direction, radians in (0, pi)
  double c = 0.0;        ///< Serrin constant, > 0
  int n = 2;

  Vec2 contact_direction() const;  ///< a on the unit circle
  Vec2 center() const;             ///< p
  double radius() const;           ///< r = n*c

  /// Throws InvalidInput if the parameters do not describe a cap domain
  /// whose closure lies in the open upper half disk.
  void validate() const;
};

enum class CurveKind { Circle, Polyline };

/// Exact-curve tag for the sigma polyline; refinement snaps new boundary
/// points back to this curve so the geometry does not drift.
struct SigmaExact {
  CurveKind kind = CurveKind::Polyline;
  Vec2 center = Vec2::Zero();  ///< circle case only
  double radius = 0.0;         ///< circle case only
};

/// A cap-like planar domain in the upper half of the unit disk.
///
/// The boundary splits into sigma (an open curve strictly inside the disk,
/// stored as an ordered polyline) and t_arc (the unit-circle arc between the
/// sigma endpoints). Traversing sigma front-to-back and then t_arc from
/// t_angle_start to t_angle_end goes counterclockwise around the domain, so
/// sigma_nodes.back() sits at angle t_angle_start and sigma_nodes.front()
/// at angle t_angle_end.
struct DomainSpec {
  std::vector<Vec2> sigma_nodes;
  SigmaExact sigma_exact;
  double t_angle_start = 0.0;
  double t_angle_end = 0.0;

  std::array<Vec2, 2> gamma() const;  ///< {sigma front, sigma back}
  double sigma_length() const;        ///< polyline length
  double t_arc_length() const { return t_angle_end - t_angle_start; }
  double diameter() const;            ///< max extent of the boundary nodes

  /// Validates endpoint matching, simplicity, node containment and
  /// positive area; throws InvalidInput otherwise.
  void validate() const;
};

/// Samples the cap circle between its two unit-circle intersections at the
/// given spacing. The gamma points satisfy <p, x> = 1 exactly, which is the
/// orthogonal-contact condition.
DomainSpec make_cap_domain(const CapSpec& spec, double boundary_spacing);

/// The half disk: sigma is the diameter from (-1,0) to (1,0), t_arc the
/// upper semicircle. The limiting domain of the cap family.
DomainSpec make_half_disk(double boundary_spacing);

/// Angle between the sigma tangent and the radial direction at each gamma
/// point, in [0, pi/2]. Zero means sigma meets the unit circle orthogonally.
std::pair<double, double> orthogonality_defect(const DomainSpec& d);

/// Conformal Killing field X_n = x_n x - (|x|^2 + 1)/2 * E_n together with
/// its divergence n * x_n. Valid in any dimension n >= 2.
std::pair<Eigen::VectorXd, double> killing_field(const Eigen::VectorXd& x);

/// Area enclosed by sigma and t_arc: shoelace sum over the sigma polyline
/// plus the exact circular segment of t_arc. Exact for polygonal sigma.
double enclosed_volume(const DomainSpec& d);

/// Closest point on the sigma exact curve (circle case: radial projection;
/// polyline case: the point itself is assumed to lie on the polyline).
Vec2 snap_to_sigma(const DomainSpec& d, const Vec2& x);

}  // namespace capserrin
