#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>

#include "nld/coupling.hpp"
#include "nld/diagnostics.hpp"
#include "nld/integrators.hpp"
#include "nld/spinor_field.hpp"

namespace nld {

inline constexpr const char* snapshot_header = "x,re_plus,im_plus,re_minus,im_minus,S,V,W";
inline constexpr const char* diagnostics_header = "t,Q,E,P,max_amp";

/// Significant digits used for CSV output: 17 unless NLD_OUTPUT_PRECISION
/// holds an integer in [1, 17].
int output_precision();

/// Run context recorded in the metadata sidecar next to each snapshot.
struct SnapshotInfo {
    std::optional<CouplingConfig> coupling;
    std::string mode;
    std::optional<Scheme> scheme;
    std::optional<double> dt;
};

struct SnapshotData {
    SpinorField field;
    double t;
    SnapshotInfo info;
};

/// Sidecar path for a snapshot: `<path>.meta`.
std::filesystem::path metadata_path(const std::filesystem::path& snapshot);

/// Write the CSV (one row per grid point) and its `.meta` sidecar, which holds
/// t, the grid, the run context, the toolkit version and the unit conventions.
void write_snapshot(const SpinorField& field, double t, const std::filesystem::path& path,
                    const SnapshotInfo& info = {});

/// Inverse of write_snapshot. Throws FormatError on a header mismatch, a row
/// count that disagrees with the metadata, or unparsable values.
SnapshotData read_snapshot(const std::filesystem::path& path);

void write_diagnostics(std::span<const DiagnosticsRecord> records, const std::filesystem::path& path);

}  // namespace nld
