#include "kp/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "kp/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "KPF1 I/O assumes a little-endian host");

namespace kp {

namespace {
constexpr char kMagic[4] = {'K', 'P', 'F', '1'};

template <class T>
void put(std::ofstream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
T get(std::ifstream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof v);
  return v;
}
}  // namespace

void write_snapshot(const std::string& path, const RealField& f, double t) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigError("write_snapshot: cannot open " + path);
  os.write(kMagic, 4);
  put<std::uint32_t>(os, 1);
  put<std::uint64_t>(os, std::uint64_t(f.grid.nx));
  put<std::uint64_t>(os, std::uint64_t(f.grid.ny));
  put<double>(os, f.grid.Lx);
  put<double>(os, f.grid.Ly);
  put<double>(os, t);
  os.write(reinterpret_cast<const char*>(f.samples.data()),
           std::streamsize(sizeof(double)) * f.grid.nx * f.grid.ny);
  if (!os) throw ConfigError("write_snapshot: short write to " + path);
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw ConfigError("read_snapshot: cannot open " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0)
    throw ConfigError("read_snapshot: bad magic in " + path);
  const auto version = get<std::uint32_t>(is);
  if (version != 1) throw ConfigError("read_snapshot: unsupported version");
  const auto nx = get<std::uint64_t>(is);
  const auto ny = get<std::uint64_t>(is);
  const double Lx = get<double>(is);
  const double Ly = get<double>(is);
  const double t = get<double>(is);
  Grid2D g(int(nx), int(ny), Lx, Ly);
  RealField f(g);
  is.read(reinterpret_cast<char*>(f.samples.data()),
          std::streamsize(sizeof(double)) * g.nx * g.ny);
  if (!is) throw ConfigError("read_snapshot: truncated file " + path);
  return {std::move(f), t};
}

}  // namespace kp
