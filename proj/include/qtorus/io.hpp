#pragma once

#include "qtorus/types.hpp"

#include <cstdint>
#include <string>

namespace qtorus {

/// CSV with header "q,p,w", one row per grid point in q-major order, values
/// printed with 17 significant digits (lossless for doubles).
std::string grid_to_csv(const WignerGrid& w);
void write_grid_csv(const WignerGrid& w, const std::string& path);

/// Inverse of write_grid_csv; grid side inferred from the row count.
WignerGrid read_grid_csv(const std::string& path);

struct RenderSpec {
    enum class Map { sign, linear };
    Map map = Map::sign;
    double fixed_max = 0;  // 0 = auto-scale
};

/// Binary PGM (P5), width = height = 2N, pixel (x=q, y=2N-1-p).
/// sign map: v -> 128 - round(127 v / vmax), so positive is dark, negative
/// light, zero mid-grey; an all-zero grid renders uniform 128.
/// linear map: [min,max] -> [255,0].
std::string render_pgm(const WignerGrid& w, const RenderSpec& spec);

/// Deterministic run metadata: {command, generator, seed, shots, version}.
std::string meta_json(const std::string& command, std::uint64_t seed, long long shots);
void write_file(const std::string& path, const std::string& bytes);

extern const char* const version;

}  // namespace qtorus
