#pragma once

// Dataset files.
//
// JSON: {"n_joints": int, "workspace_id": str, "seed": int,
//        "samples": [[theta_0, ...], ...], "labels": [0|1, ...]}
//        with 0 = Free and 1 = Collision.
// CSV:  header theta_0,...,theta_{n-1}[,label], one sample per row. The
//       label column is optional; rows without it are Free.
//
// Angles are written with 17 significant digits so both formats
// round-trip doubles exactly.

#include <filesystem>
#include <string>
#include <string_view>

#include "cspacevis/dataset.hpp"

namespace cspacevis {

std::string dataset_to_json(const Dataset& ds);
Dataset dataset_from_json(std::string_view text);

std::string dataset_to_csv(const Dataset& ds);
Dataset dataset_from_csv(std::string_view text, std::string workspace_id = "csv",
                         std::uint64_t seed = 0);

// Dispatches on extension: .csv is CSV, anything else JSON.
Dataset load_dataset(const std::filesystem::path& path);
void save_dataset(const Dataset& ds, const std::filesystem::path& path);

// Whole-file helpers shared by the loaders.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace cspacevis
