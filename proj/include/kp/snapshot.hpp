#pragma once

#include <string>

#include "kp/field.hpp"

namespace kp {

/// KPF1 field snapshot: magic "KPF1", then little-endian u32 version=1,
/// u64 nx, u64 ny, f64 Lx, f64 Ly, f64 t, then nx*ny f64 samples in
/// index order j*nx + i (x fastest).
struct Snapshot {
  RealField field;
  double t = 0.0;
};

void write_snapshot(const std::string& path, const RealField& f, double t);
Snapshot read_snapshot(const std::string& path);

}  // namespace kp
