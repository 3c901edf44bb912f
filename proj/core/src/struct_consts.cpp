#include "cycsol/struct_consts.hpp"

#include <fstream>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "cycsol/cosets.hpp"
#include "cycsol/struct_matrix.hpp"

namespace cycsol {

namespace {

const Polynomial kZero{};

}  // namespace

const Polynomial& StructureConstants::coefficient(
    const SignedComposition& sigma) const {
  auto it = terms.find(sigma);
  return it == terms.end() ? kZero : it->second;
}

StructureConstants structure_constants_via_cosets(const SignedComposition& mu,
                                                  const SignedComposition& nu) {
  StructureConstants out{mu, nu, {}};
  for (const auto& fam : double_coset_families(mu, nu))
    out.terms[fam.mu_cap_dnu] += Polynomial::x_power(fam.weight);
  return out;
}

StructureConstants structure_constants_via_matrices(
    const SignedComposition& mu, const SignedComposition& nu) {
  StructureConstants out{mu, nu, {}};
  for (const auto& m : enumerate_struct_matrices(mu, nu))
    out.terms[m.composition()] += Polynomial::x_power(m.weight());
  return out;
}

namespace {

StructureConstants compute_default(const SignedComposition& mu,
                                   const SignedComposition& nu) {
  // The coset walk visits n!-scale transversals, so switch to matrix
  // enumeration past n = 6 where it wins decisively.
  return mu.size() <= 6 ? structure_constants_via_cosets(mu, nu)
                        : structure_constants_via_matrices(mu, nu);
}

struct DiskCache {
  std::optional<std::filesystem::path> dir;
  std::mutex mutex;
};

DiskCache& disk_cache() {
  static DiskCache cache;
  return cache;
}

std::string cache_key(const SignedComposition& mu, const SignedComposition& nu) {
  auto render = [](const SignedComposition& c) {
    std::string out;
    for (int i = 0; i < c.length(); ++i) {
      if (i) out += '.';
      out += (c.part(i) < 0 ? "m" : "") + std::to_string(std::abs(c.part(i)));
    }
    return out;
  };
  return "n" + std::to_string(mu.size()) + "-" + render(mu) + "-" + render(nu) +
         ".txt";
}

constexpr const char* kDiskFormatTag = "structure-constants-v1";

// Plain line format:  tag / mu / nu / one "sigma : c0 c1 ..." line per term.
std::optional<StructureConstants> disk_load(const SignedComposition& mu,
                                            const SignedComposition& nu) {
  auto& cache = disk_cache();
  std::lock_guard lock(cache.mutex);
  if (!cache.dir) return std::nullopt;
  std::ifstream in(*cache.dir / cache_key(mu, nu));
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != kDiskFormatTag) return std::nullopt;
  std::string mu_line, nu_line;
  if (!std::getline(in, mu_line) || !std::getline(in, nu_line))
    return std::nullopt;
  try {
    if (SignedComposition::parse(mu_line) != mu ||
        SignedComposition::parse(nu_line) != nu)
      return std::nullopt;
    StructureConstants out{mu, nu, {}};
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto colon = line.find(':');
      if (colon == std::string::npos) return std::nullopt;
      SignedComposition sigma = SignedComposition::parse(line.substr(0, colon));
      std::istringstream coeffs(line.substr(colon + 1));
      std::vector<long long> c;
      long long v;
      while (coeffs >> v) c.push_back(v);
      Polynomial p{std::move(c)};
      if (!p.is_zero()) out.terms.emplace(std::move(sigma), std::move(p));
    }
    return out;
  } catch (const std::exception&) {
    return std::nullopt;  // treat malformed cache entries as misses
  }
}

void disk_store(const StructureConstants& value) {
  auto& cache = disk_cache();
  std::lock_guard lock(cache.mutex);
  if (!cache.dir) return;
  std::error_code ec;
  std::filesystem::create_directories(*cache.dir, ec);
  if (ec) return;
  std::ofstream out(*cache.dir / cache_key(value.mu, value.nu));
  if (!out) return;
  out << kDiskFormatTag << "\n"
      << value.mu.to_string() << "\n"
      << value.nu.to_string() << "\n";
  for (const auto& [sigma, poly] : value.terms) {
    out << sigma.to_string() << " :";
    for (long long c : poly.coeffs()) out << ' ' << c;
    out << "\n";
  }
}

struct MemoryCache {
  std::shared_mutex mutex;
  std::map<std::pair<SignedComposition, SignedComposition>, StructureConstants>
      table;
};

MemoryCache& memory_cache() {
  static MemoryCache cache;
  return cache;
}

}  // namespace

const StructureConstants& structure_constants(const SignedComposition& mu,
                                              const SignedComposition& nu) {
  if (mu.size() != nu.size())
    throw std::invalid_argument("structure constants require equal degree");
  auto& cache = memory_cache();
  const auto key = std::make_pair(mu, nu);
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.table.find(key);
    if (it != cache.table.end()) return it->second;
  }
  StructureConstants value;
  if (auto loaded = disk_load(mu, nu)) {
    value = std::move(*loaded);
  } else {
    value = compute_default(mu, nu);
    disk_store(value);
  }
  std::unique_lock lock(cache.mutex);
  return cache.table.emplace(key, std::move(value)).first->second;
}

Polynomial diagonal_constant(const SignedComposition& lambda) {
  return structure_constants(lambda, lambda).coefficient(lambda);
}

long long diagonal_multiplicity_factor(const SignedComposition& lambda) {
  std::map<int, long long> mult;
  for (int p : lambda.parts()) ++mult[p];
  long long out = 1;
  for (const auto& [part, count] : mult)
    for (long long i = 2; i <= count; ++i) out *= i;
  return out;
}

long long normalizer_index(const SignedComposition& lambda) {
  std::map<int, long long> mult;
  for (int p : lambda.parts()) ++mult[p > 0 ? p : -p];
  long long out = 1;
  for (const auto& [size, count] : mult)
    for (long long i = 2; i <= count; ++i) out *= i;
  return out;
}

void set_constants_disk_cache(const std::optional<std::filesystem::path>& dir) {
  std::lock_guard lock(disk_cache().mutex);
  disk_cache().dir = dir;
}

void clear_constants_memory_cache() {
  std::unique_lock lock(memory_cache().mutex);
  memory_cache().table.clear();
}

}  // namespace cycsol
