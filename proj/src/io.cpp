#include "horpca/io.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

static_assert(std::endian::native == std::endian::little, "file formats assume a little-endian host");

namespace horpca {

namespace {

void write_bytes(std::ofstream& f, const void* p, std::size_t n) {
    f.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
}

void read_bytes(std::ifstream& f, void* p, std::size_t n, const std::string& what) {
    f.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(f.gcount()) != n)
        throw std::runtime_error("truncated file while reading " + what);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + path);
    return f;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read " + path);
    return f;
}

Shape read_header(std::ifstream& f, const char* magic, const std::string& path) {
    char got[4];
    read_bytes(f, got, 4, "magic");
    if (std::memcmp(got, magic, 4) != 0)
        throw std::runtime_error(path + ": bad magic, expected " + std::string(magic, 4));
    std::uint32_t ndims = 0;
    read_bytes(f, &ndims, sizeof ndims, "ndims");
    if (ndims == 0 || ndims > 64) throw std::runtime_error(path + ": implausible ndims");
    std::vector<Index> dims(ndims);
    for (auto& d : dims) {
        std::uint64_t v = 0;
        read_bytes(f, &v, sizeof v, "dims");
        if (v == 0 || v > (1ULL << 40)) throw std::runtime_error(path + ": implausible extent");
        d = static_cast<Index>(v);
    }
    return Shape(std::move(dims));
}

void write_header(std::ofstream& f, const char* magic, const Shape& shape) {
    write_bytes(f, magic, 4);
    const std::uint32_t ndims = static_cast<std::uint32_t>(shape.order());
    write_bytes(f, &ndims, sizeof ndims);
    for (Index d : shape.dims) {
        const std::uint64_t v = static_cast<std::uint64_t>(d);
        write_bytes(f, &v, sizeof v);
    }
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

void write_dtf(const std::string& path, const DenseTensor& x) {
    std::ofstream f = open_out(path);
    write_header(f, "DTF1", x.shape);
    write_bytes(f, x.values.data(), sizeof(double) * static_cast<std::size_t>(x.size()));
    if (!f) throw std::runtime_error("failed writing " + path);
}

DenseTensor read_dtf(const std::string& path) {
    std::ifstream f = open_in(path);
    Shape shape = read_header(f, "DTF1", path);
    DenseTensor x(shape);
    read_bytes(f, x.values.data(), sizeof(double) * static_cast<std::size_t>(x.size()), "values");
    return x;
}

void write_dmk(const std::string& path, const ObservationMask& m) {
    std::ofstream f = open_out(path);
    write_header(f, "DMK1", m.shape);
    const std::uint64_t count = static_cast<std::uint64_t>(m.count());
    write_bytes(f, &count, sizeof count);
    for (Index i : m.indices) {
        const std::uint64_t v = static_cast<std::uint64_t>(i);
        write_bytes(f, &v, sizeof v);
    }
    if (!f) throw std::runtime_error("failed writing " + path);
}

ObservationMask read_dmk(const std::string& path) {
    std::ifstream f = open_in(path);
    Shape shape = read_header(f, "DMK1", path);
    std::uint64_t count = 0;
    read_bytes(f, &count, sizeof count, "count");
    if (count > static_cast<std::uint64_t>(shape.count()))
        throw std::runtime_error(path + ": mask larger than tensor");
    std::vector<Index> idx(count);
    for (auto& i : idx) {
        std::uint64_t v = 0;
        read_bytes(f, &v, sizeof v, "indices");
        i = static_cast<Index>(v);
    }
    return ObservationMask(std::move(shape), std::move(idx));  // validates ordering
}

std::map<std::string, std::string> parse_kv_text(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw UsageError("line " + std::to_string(lineno) + ": empty key");
        if (kv.count(key)) throw UsageError("duplicate key: " + key);
        kv[key] = value;
    }
    return kv;
}

std::map<std::string, std::string> parse_kv_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_kv_text(ss.str());
}

double parse_double(const std::string& text) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + text + "'");
    }
}

Index parse_index(const std::string& text) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return static_cast<Index>(v);
    } catch (const std::exception&) {
        throw UsageError("not an integer: '" + text + "'");
    }
}

std::uint64_t parse_u64(const std::string& text) {
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw UsageError("not an unsigned integer: '" + text + "'");
    }
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(trim(cur));
    return parts;
}

}  // namespace

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    for (const auto& p : split(text, ','))
        if (!p.empty()) out.push_back(parse_double(p));
    if (out.empty()) throw UsageError("empty list: '" + text + "'");
    return out;
}

std::vector<Index> parse_index_list(const std::string& text, char sep) {
    std::vector<Index> out;
    for (const auto& p : split(text, sep))
        if (!p.empty()) out.push_back(parse_index(p));
    if (out.empty()) throw UsageError("empty list: '" + text + "'");
    return out;
}

std::string format_index_list(const std::vector<Index>& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

void apply_config_kv(SolverConfig& c, const std::map<std::string, std::string>& kv) {
    for (const auto& [key, value] : kv) {
        if (key == "model") {
            try {
                c.model = model_from_name(value);
            } catch (const std::exception& e) {
                throw UsageError(e.what());
            }
        } else if (key == "lambda1") {
            c.lambda1 = parse_double(value);
        } else if (key == "lambda_star") {
            c.lambda_star = parse_double(value);
        } else if (key == "mode_weights") {
            c.mode_weights = parse_double_list(value);
        } else if (key == "mu") {
            c.mu = parse_double(value);
        } else if (key == "eta") {
            c.eta = parse_double(value);
        } else if (key == "target_ranks") {
            c.target_ranks = parse_index_list(value);
        } else if (key == "continuation_lambda0") {
            c.continuation.lambda0 = parse_double(value);
        } else if (key == "continuation_lambda_bar") {
            c.continuation.lambda_bar = parse_double(value);
        } else if (key == "continuation_factor") {
            c.continuation.factor = parse_double(value);
        } else if (key == "continuation_ratio") {
            c.continuation.ratio = parse_double(value);
        } else if (key == "continuation_alpha") {
            c.continuation.alpha = parse_double(value);
        } else if (key == "mu_initial") {
            c.mu_schedule.initial = parse_double(value);
        } else if (key == "mu_factor") {
            c.mu_schedule.factor = parse_double(value);
        } else if (key == "mu_period") {
            c.mu_schedule.period = static_cast<int>(parse_index(value));
        } else if (key == "mu_floor") {
            c.mu_schedule.floor = parse_double(value);
        } else if (key == "tol_adal") {
            c.tol_adal = parse_double(value);
        } else if (key == "tol_fista") {
            c.tol_fista = parse_double(value);
        } else if (key == "max_iters") {
            c.max_iters = static_cast<int>(parse_index(value));
        } else {
            throw UsageError("unknown config key: " + key);
        }
    }
}

void write_residual_csv(const std::string& path, const std::vector<ResidualRecord>& history) {
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << "iter,primal,dual,objective\n";
    char buf[128];
    for (std::size_t k = 0; k < history.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g,%.17g\n", k + 1, history[k].primal,
                      history[k].dual, history[k].objective);
        f << buf;
    }
    if (!f) throw std::runtime_error("failed writing " + path);
}

}  // namespace horpca
