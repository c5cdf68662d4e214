#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "squircle/types.hpp"

namespace squircle {

enum class MapId {
    SchwarzChristoffel,
    FgSquircular,
    EllipticalGrid,
    TwoSquircular,
    ThreeSquircular,
    Tapered2,
    Tapered4,
    NonAxial2,
    NonAxialHalf,
    SquelchedGrid,
    VerticalSquelch,
    HorizontalSquelch,
    BlendedEllipticalGrid,
    ThreeHalvesSquircular,
    HalfSquircular,
    FourSquircular,
    NonAxialTapered2,
    LameRadial,
    LameParametric,
};

/// A mapping kind plus its capability flags. Immutable and freely copyable;
/// the blend parameter only applies to BlendedEllipticalGrid.
class MappingKind {
  public:
    MappingKind(MapId id) : id_(id) {}  // NOLINT: implicit by design

    /// Blended Elliptical Grid with blend parameter beta in (0,1].
    static MappingKind blended(double beta);

    MapId id() const { return id_; }
    double beta() const { return beta_; }

    /// Open mappings exclude the rims of both shapes (singular points there).
    bool is_open() const;
    /// Analytic square-to-disc equations exist.
    bool analytic_forward() const;
    /// Analytic disc-to-square equations exist.
    bool analytic_inverse() const;
    /// Preserves the angle of every point about the origin.
    bool is_radial() const;
    /// Identity on both Cartesian axes.
    bool is_axial() const;

    std::string name() const;
    static std::optional<MappingKind> from_name(std::string_view name,
                                                double beta = 0.5);

  private:
    MapId id_;
    double beta_ = 0.5;
};

/// All 19 registry kinds, in catalog order.
std::span<const MapId> all_map_ids();

/// Analytic square-to-disc transform. Throws DomainError outside the (open)
/// square and CapabilityError when the kind has no forward equations.
DiscPoint square_to_disc(const MappingKind& kind, SquarePoint p);

/// Analytic disc-to-square transform; mirror of square_to_disc.
SquarePoint disc_to_square(const MappingKind& kind, DiscPoint p);

DiscPoint blended_grid_forward(double beta, SquarePoint p);
SquarePoint blended_grid_inverse(double beta, DiscPoint p);

DiscPoint lame_radial_forward(SquarePoint p);
SquarePoint lame_parametric_disc_to_square(DiscPoint p);

/// The t^2 value of the squircular continuum the kind induces: linear
/// (x^2+y^2-x^2y^2) for FG-Squircular and the one-axis squelches, the
/// tapered2 form for Tapered2/Squelched Grid, (x^2+y^2)/(1+x^2y^2) for the
/// s=t^2 family. CapabilityError for kinds with no derived continuum.
double continuum_value(const MappingKind& kind, SquarePoint p);

/// Checks f(0)=0, f(1)=1, monotone non-decreasing and continuous on [0,1]
/// by dense sampling.
bool is_rampant(const std::function<double(double)>& f, int samples = 1000);

namespace detail {

// Raw formula kernels without domain validation. The numeric inverter
// differentiates through these, so they must tolerate points marginally
// outside the canonical domain.
DiscPoint square_to_disc_raw(const MappingKind& kind, SquarePoint p);
SquarePoint disc_to_square_raw(const MappingKind& kind, DiscPoint p);

}  // namespace detail

}  // namespace squircle
