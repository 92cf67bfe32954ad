#include "slspec/serialization.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "slspec/errors.hpp"

namespace sl {
namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw IoError("parse", "bad number for " + what + ": '" + s + "'");
  }
}

}  // namespace

std::string spectral_to_json(const SpectralSequence& data) {
  // Hand-rolled writing keeps %.17g formatting (nlohmann re-renders numbers).
  std::ostringstream os;
  os << "[\n";
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto& d = data[i];
    os << "  {\"n\": " << d.n << ", \"lambda\": " << fmt(d.lambda.real())
       << ", \"alpha\": " << fmt(d.alpha.real()) << ", \"source\": \""
       << (d.source == DatumSource::measured ? "measured" : "model-tail")
       << "\"}";
    if (i + 1 < data.size()) os << ",";
    os << "\n";
  }
  os << "]\n";
  return os.str();
}

SpectralSequence spectral_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError("parse", std::string("spectral data is not valid JSON: ") +
                               e.what());
  }
  if (!j.is_array())
    throw IoError("parse", "spectral data must be a JSON array");
  std::vector<SpectralDatum> items;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("n") || !e.contains("lambda") ||
        !e.contains("alpha"))
      throw IoError("parse",
                    "each spectral entry needs n, lambda and alpha fields");
    SpectralDatum d;
    d.n = e.at("n").get<int>();
    d.lambda = e.at("lambda").get<double>();
    d.alpha = e.at("alpha").get<double>();
    if (e.contains("source") &&
        e.at("source").get<std::string>() == "model-tail")
      d.source = DatumSource::model_tail;
    items.push_back(d);
  }
  return SpectralSequence(std::move(items));
}

void save_spectral(const SpectralSequence& data, const std::string& path,
                   bool force) {
  write_text_file(path, spectral_to_json(data), force);
}

SpectralSequence load_spectral(const std::string& path) {
  return spectral_from_json(read_text_file(path));
}

std::string sigma_to_csv(const Potential& sigma) {
  std::ostringstream os;
  os << "x,sigma\n";
  for (std::size_t c = 0; c < sigma.grid().cells(); ++c)
    os << fmt(sigma.grid().midpoint(c)) << "," << fmt(sigma.values()[c])
       << "\n";
  return os.str();
}

Potential sigma_from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<double> vals;
  bool header = true;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      if (line.rfind("x,", 0) == 0) continue;  // optional header row
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw IoError("parse", "sigma CSV rows need two comma-separated "
                             "columns: '" + line + "'");
    vals.push_back(parse_double(line.substr(comma + 1), "sigma"));
  }
  if (vals.size() < 8)
    throw ValidationError("grid", "sigma CSV needs at least 8 cells");
  Grid g(vals.size());
  return Potential(g, std::move(vals));
}

void save_sigma(const Potential& sigma, const std::string& path, bool force) {
  write_text_file(path, sigma_to_csv(sigma), force);
}

Potential load_sigma(const std::string& path) {
  return sigma_from_csv(read_text_file(path));
}

std::string kernels_to_csv(const KernelTriple& triple) {
  std::ostringstream os;
  os << "x,t,K,N,C\n";
  const Grid& g = triple.grid;
  for (std::size_t j = 0; j < g.points(); ++j) {
    for (std::size_t i = 0; i <= j; ++i)
      os << fmt(g.point(j)) << "," << fmt(g.point(i)) << ","
         << fmt(triple.K[j][i]) << "," << fmt(triple.Nk[j][i]) << ",\n";
    os << fmt(g.point(j)) << ",,,," << fmt(triple.C[j]) << "\n";
  }
  return os.str();
}

void save_kernels(const KernelTriple& triple, const std::string& path,
                  bool force) {
  write_text_file(path, kernels_to_csv(triple), force);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("open", "cannot open '" + path + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw IoError("read", "failed while reading '" + path + "'");
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text,
                     bool force) {
  if (!force && std::filesystem::exists(path))
    throw IoError("exists",
                  "'" + path + "' already exists (use force to overwrite)");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("open", "cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write", "failed while writing '" + path + "'");
}

}  // namespace sl
