#pragma once

#include <map>
#include <set>
#include <vector>

#include "ballpoly/geom.hpp"

namespace ballpoly {

// A finite labeled point set. Labels are the indices into points(); they
// stay stable under tightening and subset operations via the label vector.
class Configuration {
public:
    Configuration() = default;
    Configuration(std::vector<Point3> points, Tolerance tol = {});
    Configuration(std::vector<Point3> points, std::vector<int> labels, Tolerance tol = {});

    const std::vector<Point3>& points() const { return points_; }
    const std::vector<int>& labels() const { return labels_; }
    const Tolerance& tol() const { return tol_; }
    std::size_t size() const { return points_.size(); }
    const Point3& operator[](std::size_t i) const { return points_[i]; }

    double diameter() const;
    double circumradius() const;

    Configuration subset(const std::vector<std::size_t>& keep) const;
    Configuration scaled(double factor) const;

private:
    std::vector<Point3> points_;
    std::vector<int> labels_;
    Tolerance tol_;
};

struct EssentialityReport {
    std::set<int> essential;   // labels
    std::set<int> inessential; // labels
    // For each essential point v: a point x with |x - v| = 1 that lies
    // strictly inside every other generator ball, plus the attained margin
    // min over w != v of (1 - |x - w|).
    std::map<int, Point3> witnesses;
    std::map<int, double> margins;
};

// x lies in the intersection of the unit balls centered at the points of V.
bool in_ball_set(const Configuration& v, const Point3& x);

// Essential/inessential classification. A point is essential when a witness
// sphere point around it stays strictly inside all other balls; the witness
// is found by maximizing that margin over the unit sphere, short-circuited
// by the two-diameter certificate when diam V = 1.
EssentialityReport essential_points(const Configuration& v);

// Removes all inessential points (one pass suffices: inessential points
// remain inessential after removal of other inessential points).
Configuration tighten(const Configuration& v);

// A unit ball that contains S and misses z, built from the point of conv S
// nearest to z. Throws NotSeparable when z is in conv S or the constructed
// ball fails its post-check, which signals z inside the ball hull of S.
Ball separating_ball(const std::vector<Point3>& s, const Point3& z, const Tolerance& tol = {});

// Membership of x in the spindle of a and b, i.e. in the intersection of
// all unit balls containing both: decided by maximizing |x - c| over the
// lens B(a) cap B(b). For |a-b| >= 2 the "spindle" is the solid ball on
// the segment.
bool spindle_contains(const Point3& a, const Point3& b, const Point3& x, const Tolerance& tol = {});

} // namespace ballpoly
