#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cloak/fields.hpp"
#include "cloak/metrics.hpp"
#include "cloak/multipole.hpp"

namespace cloak::io {

// 17 significant digits; round-trips doubles exactly
std::string format_double(double v);

// Field grid: header "# x y re im", one whitespace-separated record per
// sample, row-major with y increasing upward.
void write_field_grid(const std::filesystem::path& file, const fields::FieldGrid& grid);
fields::FieldGrid read_field_grid(const std::filesystem::path& file, int nx, int ny);

void write_grid_metadata(const std::filesystem::path& file, const fields::FieldGrid& grid,
                         const std::string& provenance);
// reads resolution from a metadata sidecar
std::pair<int, int> read_grid_resolution(const std::filesystem::path& meta_file);

// Coefficient dump: lines "j m re im" sorted by (j, m).
void write_coefficients(const std::filesystem::path& file,
                        const multipole::CloakSolution& solution);
// Coefficients re-attached to an existing layout/context.
multipole::CloakSolution read_coefficients(const std::filesystem::path& file,
                                           const geometry::DeviceLayout& layout,
                                           const WaveContext& ctx, multipole::Method method);

nlohmann::json report_to_json(const metrics::CloakReport& report);

// Binary PPM heatmap of Re(u): linear blue-white-red ramp over [-clip, clip],
// singular samples gray. Top image row is the top grid row.
void write_ppm(const std::filesystem::path& file, const fields::FieldGrid& grid, double clip);

std::string sha256_hex(const void* data, std::size_t size);
std::string sha256_file(const std::filesystem::path& file);

// manifest.json: every artifact file with byte count and content digest
void write_manifest(const std::filesystem::path& out_dir,
                    const std::vector<std::string>& file_names);

}  // namespace cloak::io
