#include "capserrin/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace capserrin {

namespace {

constexpr double kPi = 3.14159265358979323846;

Vec2 unit_at(double angle) { return Vec2(std::cos(angle), std::sin(angle)); }

// Proper segment intersection test (shared endpoints do not count).
bool segments_cross(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  const double d1 = cross2(b - a, c - a);
  const double d2 = cross2(b - a, d - a);
  const double d3 = cross2(d - c, a - c);
  const double d4 = cross2(d - c, b - c);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

}  // namespace

Vec2 CapSpec::contact_direction() const { return unit_at(a_angle); }

Vec2 CapSpec::center() const {
  const double r = radius();
  return contact_direction() * std::sqrt(1.0 + r * r);
}

double CapSpec::radius() const { return n * c; }

void CapSpec::validate() const {
  if (n < 2) throw InvalidInput("CapSpec: dimension n must be >= 2");
  if (!(c > 0.0)) throw InvalidInput("CapSpec: Serrin constant c must be positive");
  if (!(a_angle > 0.0 && a_angle < kPi))
    throw InvalidInput("CapSpec: contact angle must lie in (0, pi)");
  const double r = radius();
  if (!(r < 1.0)) {
    std::ostringstream msg;
    msg << "CapSpec: cap of radius " << r << " cannot lie in the upper half disk";
    throw InvalidInput(msg.str());
  }
  // Lowest point of the closed lens: either a gamma point or, when the
  // bottom of the cap circle lies inside the unit disk, that bottom point.
  const Vec2 p = center();
  const double pn = p.norm();
  const double gamma_x2 = std::sin(a_angle + std::acos(1.0 / pn)) < std::sin(a_angle - std::acos(1.0 / pn))
                              ? std::sin(a_angle + std::acos(1.0 / pn))
                              : std::sin(a_angle - std::acos(1.0 / pn));
  double min_x2 = gamma_x2;
  const Vec2 bottom(p.x(), p.y() - r);
  if (bottom.norm() < 1.0) min_x2 = std::min(min_x2, bottom.y());
  if (!(min_x2 > 0.0))
    throw InvalidInput("CapSpec: cap exits the upper half plane {x2 > 0}");
}

std::array<Vec2, 2> DomainSpec::gamma() const {
  if (sigma_nodes.size() < 2) throw InvalidInput("DomainSpec: sigma needs >= 2 nodes");
  return {sigma_nodes.front(), sigma_nodes.back()};
}

double DomainSpec::sigma_length() const {
  double len = 0.0;
  for (std::size_t i = 0; i + 1 < sigma_nodes.size(); ++i)
    len += (sigma_nodes[i + 1] - sigma_nodes[i]).norm();
  return len;
}

double DomainSpec::diameter() const {
  double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
  auto absorb = [&](const Vec2& v) {
    lo_x = std::min(lo_x, v.x());
    hi_x = std::max(hi_x, v.x());
    lo_y = std::min(lo_y, v.y());
    hi_y = std::max(hi_y, v.y());
  };
  for (const Vec2& v : sigma_nodes) absorb(v);
  const int m = 16;
  for (int i = 0; i <= m; ++i)
    absorb(unit_at(t_angle_start + (t_angle_end - t_angle_start) * i / m));
  return std::hypot(hi_x - lo_x, hi_y - lo_y);
}

void DomainSpec::validate() const {
  if (sigma_nodes.size() < 2) throw InvalidInput("DomainSpec: sigma needs >= 2 nodes");
  if (!(t_angle_end > t_angle_start))
    throw InvalidInput("DomainSpec: t_arc must have positive angular extent");
  if (t_angle_end - t_angle_start >= 2 * kPi)
    throw InvalidInput("DomainSpec: t_arc spans the whole circle");

  for (const Vec2& v : sigma_nodes)
    if (!v.allFinite()) throw InvalidInput("DomainSpec: non-finite sigma node");

  const Vec2 end_b = unit_at(t_angle_start);  // matches sigma back
  const Vec2 end_a = unit_at(t_angle_end);    // matches sigma front
  if ((sigma_nodes.back() - end_b).norm() > 1e-10 ||
      (sigma_nodes.front() - end_a).norm() > 1e-10)
    throw InvalidInput("DomainSpec: sigma endpoints do not meet the t_arc endpoints");

  // Interior sigma nodes stay strictly inside the disk and out of {x2 < 0}.
  // Nodes on the axis {x2 = 0} are allowed: the half disk is the limiting
  // reference domain used throughout.
  for (std::size_t i = 1; i + 1 < sigma_nodes.size(); ++i) {
    const Vec2& v = sigma_nodes[i];
    if (!(v.norm() < 1.0 - 1e-12))
      throw InvalidInput("DomainSpec: interior sigma node not strictly inside the unit disk");
    if (v.y() < -1e-12)
      throw InvalidInput("DomainSpec: sigma node below the axis {x2 = 0}");
  }
  for (const Vec2& g : gamma())
    if (std::abs(g.norm() - 1.0) > 1e-12)
      throw InvalidInput("DomainSpec: gamma point not on the unit circle");

  // Simplicity of sigma against itself and against a sampled t_arc.
  std::vector<Vec2> loop = sigma_nodes;
  const int arc_samples = std::max<int>(
      8, static_cast<int>(std::ceil((t_angle_end - t_angle_start) / 0.05)));
  for (int i = 1; i < arc_samples; ++i)
    loop.push_back(unit_at(t_angle_start + (t_angle_end - t_angle_start) * i / arc_samples));
  const std::size_t m = loop.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2 &a = loop[i], &b = loop[(i + 1) % m];
    for (std::size_t j = i + 2; j < m; ++j) {
      if (i == 0 && j + 1 == m) continue;  // adjacent around the loop
      if (segments_cross(a, b, loop[j], loop[(j + 1) % m]))
        throw InvalidInput("DomainSpec: boundary curve self-intersects");
    }
  }

  if (!(enclosed_volume(*this) > 0.0))
    throw InvalidInput("DomainSpec: boundary encloses non-positive area");
}

DomainSpec make_cap_domain(const CapSpec& spec, double boundary_spacing) {
  spec.validate();
  const double r = spec.radius();
  if (!(boundary_spacing > 0.0 && boundary_spacing < r / 4.0))
    throw InvalidInput("make_cap_domain: boundary_spacing must lie in (0, r/4)");

  const Vec2 p = spec.center();
  const double pn = p.norm();
  const double alpha = spec.a_angle;
  // Gamma points solve <p, x> = 1 on the unit circle.
  const double delta = std::acos(1.0 / pn);
  const double phi_a = alpha + delta;  // sigma front
  const double phi_b = alpha - delta;  // sigma back

  // Sigma is the cap-circle arc, swept counterclockwise as seen from p,
  // through the point of the cap circle nearest the origin.
  const double half_window = std::acos(r / pn);
  const double psi_mid = alpha - kPi;
  const double arc_len = 2.0 * half_window * r;
  const int m = std::max<int>(2, static_cast<int>(std::ceil(arc_len / boundary_spacing)));

  DomainSpec d;
  d.sigma_exact = SigmaExact{CurveKind::Circle, p, r};
  d.t_angle_start = phi_b;
  d.t_angle_end = phi_a;
  d.sigma_nodes.reserve(m + 1);
  for (int j = 0; j <= m; ++j) {
    const double psi = psi_mid - half_window + 2.0 * half_window * j / m;
    d.sigma_nodes.push_back(p + r * unit_at(psi));
  }
  d.sigma_nodes.front() = unit_at(phi_a);
  d.sigma_nodes.back() = unit_at(phi_b);
  d.validate();
  return d;
}

DomainSpec make_half_disk(double boundary_spacing) {
  if (!(boundary_spacing > 0.0 && boundary_spacing < 0.5))
    throw InvalidInput("make_half_disk: boundary_spacing must lie in (0, 0.5)");
  const int m = std::max<int>(2, static_cast<int>(std::ceil(2.0 / boundary_spacing)));
  DomainSpec d;
  d.sigma_exact.kind = CurveKind::Polyline;
  d.t_angle_start = 0.0;
  d.t_angle_end = kPi;
  d.sigma_nodes.reserve(m + 1);
  for (int j = 0; j <= m; ++j)
    d.sigma_nodes.push_back(Vec2(-1.0 + 2.0 * j / m, 0.0));
  d.validate();
  return d;
}

std::pair<double, double> orthogonality_defect(const DomainSpec& d) {
  const auto g = d.gamma();
  auto tangent_at = [&](bool front) -> Vec2 {
    if (d.sigma_exact.kind == CurveKind::Circle) {
      const Vec2 rad = g[front ? 0 : 1] - d.sigma_exact.center;
      return perp(rad).normalized();
    }
    const auto& nodes = d.sigma_nodes;
    return front ? (nodes[1] - nodes[0]).normalized()
                 : (nodes[nodes.size() - 1] - nodes[nodes.size() - 2]).normalized();
  };
  auto line_angle = [](const Vec2& t, const Vec2& radial) {
    return std::atan2(std::abs(cross2(t, radial)), std::abs(t.dot(radial)));
  };
  return {line_angle(tangent_at(true), g[0]), line_angle(tangent_at(false), g[1])};
}

std::pair<Eigen::VectorXd, double> killing_field(const Eigen::VectorXd& x) {
  const Eigen::Index n = x.size();
  if (n < 2) throw InvalidInput("killing_field: dimension must be >= 2");
  const double xn = x[n - 1];
  Eigen::VectorXd field = xn * x;
  field[n - 1] -= 0.5 * (x.squaredNorm() + 1.0);
  return {field, static_cast<double>(n) * xn};
}

double enclosed_volume(const DomainSpec& d) {
  double twice_area = 0.0;
  const auto& s = d.sigma_nodes;
  // Shoelace over the sigma polyline closed with the chord back to front.
  for (std::size_t i = 0; i + 1 < s.size(); ++i) twice_area += cross2(s[i], s[i + 1]);
  twice_area += cross2(s.back(), s.front());
  const double span = d.t_angle_end - d.t_angle_start;
  return 0.5 * twice_area + 0.5 * (span - std::sin(span));
}

Vec2 snap_to_sigma(const DomainSpec& d, const Vec2& x) {
  if (d.sigma_exact.kind == CurveKind::Circle) {
    const Vec2 v = x - d.sigma_exact.center;
    return d.sigma_exact.center + d.sigma_exact.radius * v.normalized();
  }
  return x;
}

}  // namespace capserrin
