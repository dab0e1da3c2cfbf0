#pragma once

#include <string>
#include <variant>
#include <vector>

#include "polydisc/polynomial.hpp"
#include "polydisc/rootfind.hpp"

namespace polydisc {

/// Tagged plane region with exact membership predicates.
///
/// Conventions: arg z is taken in [0, 2pi) with arg 0 = 0; sectors are
/// half-open in angle, [alpha, beta); the origin disk is closed, the
/// point disk open, the inscribed polygon closed.
class Region {
  public:
    struct Sector {
        double alpha, beta;  // 0 <= alpha < beta <= 2pi
    };
    struct AnnularSector {
        double r, alpha, beta;  // r < |z| < 1/r and alpha <= arg z < beta
    };
    struct OriginDisk {
        double r;  // |z| <= r
    };
    struct AnnulusComplement {
        double r;  // |z| <= r or |z| >= 1/r, 0 < r < 1
    };
    struct PointDisk {
        Complex center;  // |center| = 1
        double r;        // |z - center| < r, 0 < r < 2
    };
    struct InscribedPolygon {
        std::vector<double> angles;    // strictly increasing, in [0, 2pi)
        std::vector<Complex> vertices; // e^{i angle}
    };

    static Region sector(double alpha, double beta);
    static Region annular_sector(double r, double alpha, double beta);
    static Region origin_disk(double r);
    static Region annulus_complement(double r);
    static Region point_disk(Complex center, double r);
    static Region inscribed_polygon(std::vector<double> angles);

    /// Parse the CLI region syntax:
    ///   origin-disk:r=0.5
    ///   annulus-complement:r=0.5
    ///   disk@<angle>:r=<v>          (point disk centered at e^{i angle})
    ///   polygon:<a1>,<a2>,...       (inscribed polygon, angles in radians)
    ///   sector:alpha=<v>,beta=<v>
    ///   annular-sector:r=<v>,alpha=<v>,beta=<v>
    static Region parse(const std::string& spec);

    bool contains(Complex z) const;
    std::string describe() const;

    template <class T>
    const T* as() const {
        return std::get_if<T>(&v_);
    }

  private:
    using Variant = std::variant<Sector, AnnularSector, OriginDisk,
                                 AnnulusComplement, PointDisk, InscribedPolygon>;
    explicit Region(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

/// arg z mapped to [0, 2pi), with arg 0 = 0.
double arg_in_2pi(Complex z);

/// Fraction of the roots, with multiplicity, lying in the region.
double tau(const RootMultiset& roots, const Region& region);

/// | tau(sector) - (beta-alpha)/(2pi) |.
double sector_discrepancy(const RootMultiset& roots, double alpha, double beta);

/// | tau(annular sector) - (beta-alpha)/(2pi) |.
double annular_discrepancy(const RootMultiset& roots, double r, double alpha,
                           double beta);

}  // namespace polydisc
