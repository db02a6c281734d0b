#include "subheat/grid.hpp"

#include "subheat/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>

namespace subheat {

Grid::Grid(std::vector<double> lo, std::vector<double> hi, std::vector<int> shape)
    : lo_(std::move(lo)), hi_(std::move(hi)), shape_(std::move(shape)) {
    if (lo_.size() != hi_.size() || lo_.size() != shape_.size() || shape_.empty())
        throw config_error("grid: lo/hi/shape must have the same nonzero dimension");
    const std::size_t n = shape_.size();
    spacing_.resize(n);
    stride_.resize(n);
    size_ = 1;
    cell_volume_ = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        if (shape_[k] < 2) throw config_error("grid: need at least 2 nodes per axis");
        if (!(hi_[k] > lo_[k])) throw config_error("grid: hi must exceed lo on every axis");
        spacing_[k] = (hi_[k] - lo_[k]) / (shape_[k] - 1);
        cell_volume_ *= spacing_[k];
    }
    for (std::size_t k = n; k-- > 0;) {
        stride_[k] = size_;
        size_ *= static_cast<std::size_t>(shape_[k]);
    }
}

double Grid::min_spacing() const {
    return *std::min_element(spacing_.begin(), spacing_.end());
}

std::size_t Grid::flat(std::span<const int> idx) const {
    std::size_t f = 0;
    for (std::size_t k = 0; k < shape_.size(); ++k)
        f += static_cast<std::size_t>(idx[k]) * stride_[k];
    return f;
}

void Grid::unflat(std::size_t flat_idx, std::span<int> idx) const {
    for (std::size_t k = 0; k < shape_.size(); ++k) {
        idx[k] = static_cast<int>(flat_idx / stride_[k]);
        flat_idx %= stride_[k];
    }
}

void Grid::coords(std::size_t flat_idx, std::span<double> xyz) const {
    for (std::size_t k = 0; k < shape_.size(); ++k) {
        const std::size_t i = flat_idx / stride_[k];
        flat_idx %= stride_[k];
        xyz[k] = lo_[k] + static_cast<double>(i) * spacing_[k];
    }
}

std::vector<double> Grid::coords(std::size_t flat_idx) const {
    std::vector<double> xyz(shape_.size());
    coords(flat_idx, xyz);
    return xyz;
}

std::vector<int> Grid::nearest_node(std::span<const double> x) const {
    std::vector<int> idx(shape_.size());
    for (std::size_t k = 0; k < shape_.size(); ++k) {
        const double f = (x[k] - lo_[k]) / spacing_[k];
        idx[k] = std::clamp(static_cast<int>(std::lround(f)), 0, shape_[k] - 1);
    }
    return idx;
}

bool Grid::contains(std::span<const double> x) const {
    for (std::size_t k = 0; k < shape_.size(); ++k)
        if (x[k] < lo_[k] - 1e-12 || x[k] > hi_[k] + 1e-12) return false;
    return true;
}

GridFunction::GridFunction(Grid grid, int nt, double t0, double dt)
    : grid_(std::move(grid)), nt_(nt), t0_(t0), dt_(dt) {
    if (nt_ < 1) throw config_error("grid function: nt must be >= 1");
    if (nt_ > 1 && !(dt_ > 0)) throw config_error("grid function: dt must be positive for nt > 1");
    values_.assign(static_cast<std::size_t>(nt_) * grid_.size(), 0.0);
}

GridFunction GridFunction::constant(const Grid& grid, double value, int nt, double t0, double dt) {
    GridFunction f(grid, nt, t0, dt);
    std::fill(f.values_.begin(), f.values_.end(), value);
    f.set_positive(value > 0);
    return f;
}

int GridFunction::slice_index(double t) const {
    if (nt_ == 1) return 0;
    const double f = (t - t0_) / dt_;
    const int k = static_cast<int>(std::lround(f));
    if (k < 0 || k >= nt_)
        throw numerical_error("time " + std::to_string(t) + " outside stored range");
    return k;
}

std::span<double> GridFunction::slice(int k) {
    return {values_.data() + static_cast<std::size_t>(k) * grid_.size(), grid_.size()};
}

std::span<const double> GridFunction::slice(int k) const {
    return {values_.data() + static_cast<std::size_t>(k) * grid_.size(), grid_.size()};
}

double GridFunction::min_value() const {
    return *std::min_element(values_.begin(), values_.end());
}

double GridFunction::max_value() const {
    return *std::max_element(values_.begin(), values_.end());
}

bool GridFunction::all_finite() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](double v) { return std::isfinite(v); });
}

GridFunction sample_on_grid(const Grid& grid,
                            const std::function<double(std::span<const double>)>& fn) {
    GridFunction f(grid, 1, 0.0, 0.0);
    std::vector<double> x(static_cast<std::size_t>(grid.dim()));
    auto out = f.slice(0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        grid.coords(i, x);
        out[i] = fn(x);
    }
    return f;
}

namespace {

constexpr char kMagic[4] = {'S', 'H', 'F', '1'};

template <typename T>
void put(std::ofstream& os, const T& v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::ifstream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    return v;
}

} // namespace

void write_field(const std::string& path, const GridFunction& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw config_error("cannot open field file for writing: " + path);
    os.write(kMagic, 4);
    put<std::uint32_t>(os, 1); // version
    put<std::uint32_t>(os, static_cast<std::uint32_t>(f.grid().dim()));
    put<std::uint32_t>(os, static_cast<std::uint32_t>(f.nt()));
    put<std::uint32_t>(os, f.positive() ? 1u : 0u);
    for (int k = 0; k < f.grid().dim(); ++k) {
        put<std::uint64_t>(os, static_cast<std::uint64_t>(f.grid().shape()[static_cast<std::size_t>(k)]));
        put<double>(os, f.grid().lo()[static_cast<std::size_t>(k)]);
        put<double>(os, f.grid().hi()[static_cast<std::size_t>(k)]);
    }
    put<double>(os, f.t0());
    put<double>(os, f.dt());
    os.write(reinterpret_cast<const char*>(f.values().data()),
             static_cast<std::streamsize>(f.values().size() * sizeof(double)));
    if (!os) throw config_error("short write on field file: " + path);
}

GridFunction read_field(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw config_error("cannot open field file: " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw config_error("not a field file (bad magic): " + path);
    const auto version = get<std::uint32_t>(is);
    if (version != 1) throw config_error("unsupported field file version");
    const auto dim = get<std::uint32_t>(is);
    const auto nt = get<std::uint32_t>(is);
    const auto positive = get<std::uint32_t>(is);
    std::vector<int> shape(dim);
    std::vector<double> lo(dim), hi(dim);
    for (std::uint32_t k = 0; k < dim; ++k) {
        shape[k] = static_cast<int>(get<std::uint64_t>(is));
        lo[k] = get<double>(is);
        hi[k] = get<double>(is);
    }
    const double t0 = get<double>(is);
    const double dt = get<double>(is);
    GridFunction f(Grid(lo, hi, shape), static_cast<int>(nt), t0, dt);
    is.read(reinterpret_cast<char*>(f.values().data()),
            static_cast<std::streamsize>(f.values().size() * sizeof(double)));
    if (!is) throw config_error("truncated field file: " + path);
    f.set_positive(positive != 0);
    return f;
}

} // namespace subheat
