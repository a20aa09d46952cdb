#pragma once

#include "horpca/mask.hpp"
#include "horpca/solver.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace horpca {

/// Bad flags, malformed config/spec files: maps to exit code 2 in the CLI.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Binary tensor file: magic "DTF1", u32 LE ndims, ndims x u64 LE dims,
/// then the values as f64 LE in storage order.
void write_dtf(const std::string& path, const DenseTensor& x);
DenseTensor read_dtf(const std::string& path);

/// Mask file: magic "DMK1", u32 ndims, dims, u64 m, m x u64 strictly
/// increasing linear indices.
void write_dmk(const std::string& path, const ObservationMask& m);
ObservationMask read_dmk(const std::string& path);

/// One `key = value` per line; blank lines and `#` comments allowed.
std::map<std::string, std::string> parse_kv_text(const std::string& text);
std::map<std::string, std::string> parse_kv_file(const std::string& path);

/// Apply config-file keys onto a SolverConfig. Keys mirror the field names
/// (nested packs flattened: continuation_lambda0, mu_factor, ...). Unknown
/// keys raise UsageError.
void apply_config_kv(SolverConfig& c, const std::map<std::string, std::string>& kv);

void write_residual_csv(const std::string& path, const std::vector<ResidualRecord>& history);

std::vector<double> parse_double_list(const std::string& text);
std::vector<Index> parse_index_list(const std::string& text, char sep = ',');
std::string format_index_list(const std::vector<Index>& v, char sep = ',');

double parse_double(const std::string& text);
Index parse_index(const std::string& text);
std::uint64_t parse_u64(const std::string& text);

}  // namespace horpca
