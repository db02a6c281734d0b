#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace subheat {

// Uniform Cartesian lattice over a box in R^n. Nodes sit at
// lo[k] + i_k * spacing[k], i_k in [0, shape[k]). Row-major flat indexing,
// last axis fastest.
class Grid {
public:
    Grid() = default;
    Grid(std::vector<double> lo, std::vector<double> hi, std::vector<int> shape);

    int dim() const { return static_cast<int>(shape_.size()); }
    const std::vector<int>& shape() const { return shape_; }
    const std::vector<double>& lo() const { return lo_; }
    const std::vector<double>& hi() const { return hi_; }
    const std::vector<double>& spacing() const { return spacing_; }
    double spacing(int axis) const { return spacing_[static_cast<std::size_t>(axis)]; }
    double min_spacing() const;

    std::size_t size() const { return size_; }
    double cell_volume() const { return cell_volume_; }

    std::size_t flat(std::span<const int> idx) const;
    void unflat(std::size_t flat_idx, std::span<int> idx) const;
    // Coordinates of node `flat_idx` written into xyz (dim() entries).
    void coords(std::size_t flat_idx, std::span<double> xyz) const;
    std::vector<double> coords(std::size_t flat_idx) const;

    // Nearest node to a point (components clamped to the box).
    std::vector<int> nearest_node(std::span<const double> x) const;

    bool contains(std::span<const double> x) const;

    bool operator==(const Grid& other) const = default;

private:
    std::vector<double> lo_, hi_, spacing_;
    std::vector<int> shape_;
    std::vector<std::size_t> stride_;
    std::size_t size_ = 0;
    double cell_volume_ = 1.0;
};

// Scalar values on a space-time lattice: `nt` time samples of a spatial grid,
// times t0 + k*dt. nt == 1 with dt == 0 models a static field.
class GridFunction {
public:
    GridFunction() = default;
    GridFunction(Grid grid, int nt, double t0, double dt);

    static GridFunction constant(const Grid& grid, double value, int nt = 1,
                                 double t0 = 0.0, double dt = 0.0);

    const Grid& grid() const { return grid_; }
    int nt() const { return nt_; }
    double t0() const { return t0_; }
    double dt() const { return dt_; }
    double time(int k) const { return t0_ + k * dt_; }
    double t_end() const { return time(nt_ - 1); }

    // Index of the stored slice nearest to time t; throws if t is outside
    // [t0, t_end] by more than half a step.
    int slice_index(double t) const;

    std::span<double> slice(int k);
    std::span<const double> slice(int k) const;
    double& at(int k, std::size_t node) { return values_[static_cast<std::size_t>(k) * grid_.size() + node]; }
    double at(int k, std::size_t node) const { return values_[static_cast<std::size_t>(k) * grid_.size() + node]; }

    std::vector<double>& values() { return values_; }
    const std::vector<double>& values() const { return values_; }

    double min_value() const;
    double max_value() const;
    bool all_finite() const;

    bool positive() const { return positive_; }
    void set_positive(bool p) { positive_ = p; }

private:
    Grid grid_;
    int nt_ = 0;
    double t0_ = 0.0, dt_ = 0.0;
    bool positive_ = false;
    std::vector<double> values_;
};

// Applies fn(x) at every node of one slice. fn receives the node coordinates.
GridFunction sample_on_grid(const Grid& grid,
                            const std::function<double(std::span<const double>)>& fn);

// Flat binary field format (magic "SHF1"): header with dims/spacings, then the
// row-major payload. See README for the layout.
void write_field(const std::string& path, const GridFunction& f);
GridFunction read_field(const std::string& path);

} // namespace subheat
