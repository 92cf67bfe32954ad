#ifndef SLSPEC_SERIALIZATION_HPP
#define SLSPEC_SERIALIZATION_HPP

#include <string>

#include "slspec/inverse.hpp"
#include "slspec/kernels.hpp"
#include "slspec/potential.hpp"
#include "slspec/spectral.hpp"

namespace sl {

// Spectral data: JSON array of {"n", "lambda", "alpha", "source"} objects,
// source one of "measured" | "model-tail".  Numbers are %.17g so that a
// write/read round trip is bit-exact.
std::string spectral_to_json(const SpectralSequence& data);
SpectralSequence spectral_from_json(const std::string& text);
void save_spectral(const SpectralSequence& data, const std::string& path,
                   bool force);
SpectralSequence load_spectral(const std::string& path);

// Potential: CSV "x,sigma", one row per cell midpoint.
std::string sigma_to_csv(const Potential& sigma);
Potential sigma_from_csv(const std::string& text);
void save_sigma(const Potential& sigma, const std::string& path, bool force);
Potential load_sigma(const std::string& path);

// Kernel triple: CSV "x,t,K,N,C"; triangle rows carry (x,t,K,N) and leave C
// empty, one extra row per x carries (x,,,,C).
std::string kernels_to_csv(const KernelTriple& triple);
void save_kernels(const KernelTriple& triple, const std::string& path,
                  bool force);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text,
                     bool force);

}  // namespace sl

#endif
