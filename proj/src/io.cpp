#include "cloak/io.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace cloak::io {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_field_grid(const std::filesystem::path& file, const fields::FieldGrid& grid) {
  std::ofstream out(file);
  if (!out) throw numerical_error("cannot open " + file.string() + " for writing");
  out << "# x y re im\n";
  for (int iy = 0; iy < grid.ny; ++iy) {
    for (int ix = 0; ix < grid.nx; ++ix) {
      Point2 p = grid.point_at(ix, iy);
      Complex v = grid.values[(size_t)iy * grid.nx + ix];
      out << format_double(p.x) << ' ' << format_double(p.y) << ' ' << format_double(v.real())
          << ' ' << format_double(v.imag()) << '\n';
    }
  }
}

fields::FieldGrid read_field_grid(const std::filesystem::path& file, int nx, int ny) {
  std::ifstream in(file);
  if (!in) throw invalid_argument_error("cannot open " + file.string());
  std::string header;
  std::getline(in, header);
  fields::FieldGrid grid;
  grid.nx = nx;
  grid.ny = ny;
  grid.values.resize((size_t)nx * ny);
  grid.singular.assign((size_t)nx * ny, 0);
  double x_first = 0, y_first = 0;
  for (std::size_t i = 0; i < grid.values.size(); ++i) {
    double x, y, re, im;
    if (!(in >> x >> y >> re >> im))
      throw invalid_argument_error(file.string() + ": truncated field grid");
    grid.values[i] = {re, im};
    if (!std::isfinite(re) || !std::isfinite(im)) grid.singular[i] = 1;
    if (i == 0) {
      x_first = x;
      y_first = y;
      grid.window.x_min = x;
      grid.window.y_min = y;
    }
    grid.window.x_max = std::max(i == 0 ? x_first : grid.window.x_max, x);
    grid.window.y_max = std::max(i == 0 ? y_first : grid.window.y_max, y);
  }
  return grid;
}

void write_grid_metadata(const std::filesystem::path& file, const fields::FieldGrid& grid,
                         const std::string& provenance) {
  nlohmann::json meta;
  meta["window"] = {grid.window.x_min, grid.window.x_max, grid.window.y_min, grid.window.y_max};
  meta["resolution"] = {grid.nx, grid.ny};
  meta["provenance"] = provenance;
  meta["singular_samples"] =
      (std::int64_t)std::count(grid.singular.begin(), grid.singular.end(), 1);
  std::ofstream out(file);
  out << meta.dump(2) << '\n';
}

std::pair<int, int> read_grid_resolution(const std::filesystem::path& meta_file) {
  std::ifstream in(meta_file);
  if (!in) throw invalid_argument_error("cannot open " + meta_file.string());
  nlohmann::json meta = nlohmann::json::parse(in);
  return {meta.at("resolution").at(0).get<int>(), meta.at("resolution").at(1).get<int>()};
}

void write_coefficients(const std::filesystem::path& file,
                        const multipole::CloakSolution& solution) {
  std::ofstream out(file);
  if (!out) throw numerical_error("cannot open " + file.string() + " for writing");
  for (std::size_t j = 0; j < solution.sources.size(); ++j) {
    const auto& src = solution.sources[j];
    for (int m = -src.M; m <= src.M; ++m)
      out << j << ' ' << m << ' ' << format_double(src.b(m).real()) << ' '
          << format_double(src.b(m).imag()) << '\n';
  }
}

multipole::CloakSolution read_coefficients(const std::filesystem::path& file,
                                           const geometry::DeviceLayout& layout,
                                           const WaveContext& ctx, multipole::Method method) {
  std::ifstream in(file);
  if (!in) throw invalid_argument_error("cannot open " + file.string());
  struct Entry {
    int j, m;
    Complex b;
  };
  std::vector<Entry> entries;
  int j, m;
  double re, im;
  int max_m = 0, max_j = -1;
  while (in >> j >> m >> re >> im) {
    entries.push_back({j, m, {re, im}});
    max_m = std::max(max_m, std::abs(m));
    max_j = std::max(max_j, j);
  }
  if (max_j + 1 != layout.n_dev())
    throw invalid_argument_error(file.string() + ": device count does not match layout");

  multipole::CloakSolution sol;
  sol.layout = layout;
  sol.ctx = ctx;
  sol.method = method;
  sol.sources.resize((size_t)layout.n_dev());
  for (int d = 0; d < layout.n_dev(); ++d) {
    sol.sources[(size_t)d].center = layout.positions[(size_t)d];
    sol.sources[(size_t)d].M = max_m;
    sol.sources[(size_t)d].coeff.assign((size_t)(2 * max_m + 1), Complex{0.0, 0.0});
  }
  for (const auto& e : entries) sol.sources[(size_t)e.j].b(e.m) = e.b;
  return sol;
}

nlohmann::json report_to_json(const metrics::CloakReport& report) {
  nlohmann::json j;
  j["delta"] = report.delta;
  j["sigma"] = report.sigma;
  j["M"] = report.M;
  j["method"] = report.method;
  j["interior_error"] = report.interior_error;
  j["radiation_error"] = report.radiation_error;
  if (report.beta) j["beta"] = *report.beta;
  if (report.device_radius_over_delta)
    j["device_radius_over_delta"] = *report.device_radius_over_delta;
  return j;
}

void write_ppm(const std::filesystem::path& file, const fields::FieldGrid& grid, double clip) {
  if (!(clip > 0.0)) throw invalid_argument_error("write_ppm: clip must be positive");
  std::ofstream out(file, std::ios::binary);
  if (!out) throw numerical_error("cannot open " + file.string() + " for writing");
  out << "P6\n" << grid.nx << ' ' << grid.ny << "\n255\n";
  std::vector<unsigned char> row((size_t)grid.nx * 3);
  for (int iy = grid.ny - 1; iy >= 0; --iy) {
    for (int ix = 0; ix < grid.nx; ++ix) {
      std::size_t idx = (size_t)iy * grid.nx + ix;
      unsigned char r, g, b;
      if (grid.singular[idx]) {
        r = g = b = 128;
      } else {
        double x = grid.values[idx].real() / clip;
        x = std::clamp(x, -1.0, 1.0);
        r = (unsigned char)std::lround(x < 0 ? 255.0 * (1.0 + x) : 255.0);
        g = (unsigned char)std::lround(255.0 * (1.0 - std::fabs(x)));
        b = (unsigned char)std::lround(x > 0 ? 255.0 * (1.0 - x) : 255.0);
      }
      row[(size_t)ix * 3] = r;
      row[(size_t)ix * 3 + 1] = g;
      row[(size_t)ix * 3 + 2] = b;
    }
    out.write(reinterpret_cast<const char*>(row.data()), (std::streamsize)row.size());
  }
}

namespace {

// SHA-256 (FIPS 180-4)
struct Sha256 {
  std::uint32_t h[8] = {0x6a09e667u, 0xbb67ae85u, 0x3c6ef372u, 0xa54ff53au,
                        0x510e527fu, 0x9b05688cu, 0x1f83d9abu, 0x5be0cd19u};
  std::uint64_t total = 0;
  std::array<unsigned char, 64> buf{};
  std::size_t fill = 0;

  static std::uint32_t rotr(std::uint32_t x, int n) { return (x >> n) | (x << (32 - n)); }

  void block(const unsigned char* p) {
    static const std::uint32_t K[64] = {
        0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1, 0x923f82a4,
        0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3, 0x72be5d74, 0x80deb1fe,
        0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786, 0x0fc19dc6, 0x240ca1cc, 0x2de92c6f,
        0x4a7484aa, 0x5cb0a9dc, 0x76f988da, 0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7,
        0xc6e00bf3, 0xd5a79147, 0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc,
        0x53380d13, 0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
        0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070, 0x19a4c116,
        0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a, 0x5b9cca4f, 0x682e6ff3,
        0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208, 0x90befffa, 0xa4506ceb, 0xbef9a3f7,
        0xc67178f2};
    std::uint32_t w[64];
    for (int i = 0; i < 16; ++i)
      w[i] = (std::uint32_t)p[4 * i] << 24 | (std::uint32_t)p[4 * i + 1] << 16 |
             (std::uint32_t)p[4 * i + 2] << 8 | p[4 * i + 3];
    for (int i = 16; i < 64; ++i) {
      std::uint32_t s0 = rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
      std::uint32_t s1 = rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
      w[i] = w[i - 16] + s0 + w[i - 7] + s1;
    }
    std::uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4], f = h[5], g = h[6],
                  hh = h[7];
    for (int i = 0; i < 64; ++i) {
      std::uint32_t S1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
      std::uint32_t ch = (e & f) ^ (~e & g);
      std::uint32_t t1 = hh + S1 + ch + K[i] + w[i];
      std::uint32_t S0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
      std::uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
      std::uint32_t t2 = S0 + maj;
      hh = g;
      g = f;
      f = e;
      e = d + t1;
      d = c;
      c = b;
      b = a;
      a = t1 + t2;
    }
    h[0] += a;
    h[1] += b;
    h[2] += c;
    h[3] += d;
    h[4] += e;
    h[5] += f;
    h[6] += g;
    h[7] += hh;
  }

  void update(const unsigned char* p, std::size_t n) {
    total += n;
    while (n > 0) {
      std::size_t take = std::min(n, buf.size() - fill);
      std::memcpy(buf.data() + fill, p, take);
      fill += take;
      p += take;
      n -= take;
      if (fill == buf.size()) {
        block(buf.data());
        fill = 0;
      }
    }
  }

  std::string hex() {
    std::uint64_t bits = total * 8;
    unsigned char pad = 0x80;
    update(&pad, 1);
    unsigned char zero = 0;
    while (fill != 56) update(&zero, 1);
    unsigned char len[8];
    for (int i = 0; i < 8; ++i) len[i] = (unsigned char)(bits >> (56 - 8 * i));
    update(len, 8);
    char out[65];
    for (int i = 0; i < 8; ++i) std::snprintf(out + 8 * i, 9, "%08x", h[i]);
    return std::string(out, 64);
  }
};

}  // namespace

std::string sha256_hex(const void* data, std::size_t size) {
  Sha256 s;
  s.update(static_cast<const unsigned char*>(data), size);
  return s.hex();
}

std::string sha256_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw invalid_argument_error("cannot open " + file.string());
  Sha256 s;
  char chunk[65536];
  while (in.read(chunk, sizeof chunk) || in.gcount() > 0)
    s.update(reinterpret_cast<const unsigned char*>(chunk), (size_t)in.gcount());
  return s.hex();
}

void write_manifest(const std::filesystem::path& out_dir,
                    const std::vector<std::string>& file_names) {
  std::vector<std::string> names = file_names;
  std::sort(names.begin(), names.end());
  nlohmann::json manifest;
  manifest["files"] = nlohmann::json::array();
  for (const auto& name : names) {
    std::filesystem::path p = out_dir / name;
    nlohmann::json entry;
    entry["name"] = name;
    entry["bytes"] = (std::int64_t)std::filesystem::file_size(p);
    entry["sha256"] = sha256_file(p);
    manifest["files"].push_back(entry);
  }
  std::ofstream out(out_dir / "manifest.json");
  out << manifest.dump(2) << '\n';
}

}  // namespace cloak::io
