#include "cycsol/signed_composition.hpp"

#include <algorithm>
#include <cstdlib>

namespace cycsol {

SignedComposition SignedComposition::parse(const std::string& text) {
  std::vector<int> parts;
  size_t i = 0;
  // Accepts "3,-2" and "(3,-2)"; whitespace around parts is tolerated.
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  bool parenthesised = i < text.size() && text[i] == '(';
  if (parenthesised) ++i;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] == ')') {
      ++i;
      break;
    }
    size_t consumed = 0;
    int value;
    try {
      value = std::stoi(text.substr(i), &consumed);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse signed composition: " + text);
    }
    i += consumed;
    parts.push_back(value);
    skip_ws();
    if (i < text.size() && text[i] == ',') ++i;
  }
  skip_ws();
  if (i != text.size())
    throw std::invalid_argument("cannot parse signed composition: " + text);
  return SignedComposition(std::move(parts));
}

GeneratorSet generator_set(const SignedComposition& mu) {
  GeneratorSet out;
  const auto bounds = mu.block_bounds();
  for (int i = 0; i < mu.length(); ++i) {
    // s-generators inside block i: indices bounds[i]+1 .. bounds[i+1]-1.
    for (int j = bounds[static_cast<size_t>(i)] + 1;
         j < bounds[static_cast<size_t>(i) + 1]; ++j)
      out.s_indices.push_back(j);
    // t-generators for the whole block when the part is positive.
    if (mu.part(i) > 0)
      for (int j = bounds[static_cast<size_t>(i)] + 1;
           j <= bounds[static_cast<size_t>(i) + 1]; ++j)
        out.t_indices.push_back(j);
  }
  return out;
}

namespace {

void generate(int remaining, std::vector<int>& prefix,
              std::vector<SignedComposition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int k = 1; k <= remaining; ++k) {
    for (int sign : {+1, -1}) {
      prefix.push_back(sign * k);
      generate(remaining - k, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<SignedComposition> enumerate_signed_compositions(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  std::vector<SignedComposition> out;
  std::vector<int> prefix;
  generate(n, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

SignedComposition signed_partition_of(const SignedComposition& mu) {
  std::vector<int> parts = mu.parts();
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return SignedComposition(std::move(parts));
}

std::vector<std::pair<PseudoSignedComposition, PseudoSignedComposition>>
sign_compatible_splits(const SignedComposition& mu) {
  const int k = mu.length();
  std::vector<std::pair<PseudoSignedComposition, PseudoSignedComposition>> out;
  // Odometer over how much of |mu_i| goes to the left piece; the first
  // coordinate is the fastest-moving digit.
  std::vector<int> take(static_cast<size_t>(k), 0);
  while (true) {
    std::vector<int> left(static_cast<size_t>(k)), right(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
      int sign = mu.part(i) > 0 ? 1 : -1;
      left[static_cast<size_t>(i)] = sign * take[static_cast<size_t>(i)];
      right[static_cast<size_t>(i)] = mu.part(i) - left[static_cast<size_t>(i)];
    }
    out.emplace_back(PseudoSignedComposition(std::move(left)),
                     PseudoSignedComposition(std::move(right)));
    int i = 0;
    while (i < k) {
      int cap = std::abs(mu.part(i));
      if (take[static_cast<size_t>(i)] < cap) {
        ++take[static_cast<size_t>(i)];
        break;
      }
      take[static_cast<size_t>(i)] = 0;
      ++i;
    }
    if (i == k) break;
  }
  return out;
}

}  // namespace cycsol
