#pragma once

#include <cstdint>
#include <string>

namespace lsmap {

// Pauli string over up to 32 logical patches with a symbolic sign.
// The operator is
//   i^iexp * (-1)^neg * (-1)^(outcome bits selected by outcome_mask)
//     * prod_site X^x Z^z            (X written left of Z at every site)
// Y enters as iXZ, so Hermitian strings keep iexp == |x & z| (mod 2), and
// after measurement outcomes are fixed every phase collapses to +-1.
struct PauliString {
  std::uint32_t x = 0;
  std::uint32_t z = 0;
  std::uint8_t iexp = 0;  // mod 4
  bool neg = false;
  std::uint64_t outcome_mask = 0;

  static PauliString identity() { return {}; }
  static PauliString single(int site, char p);
  static PauliString from_letters(const std::string& letters);  // "ZIZ"

  bool commutes_with(const PauliString& o) const;
  PauliString times(const PauliString& o) const;
  PauliString with_outcome(int var) const;  // multiply by (-1)^{m_var}

  bool is_identity_support() const { return x == 0 && z == 0; }
  bool same_letters(const PauliString& o) const {
    return x == o.x && z == o.z;
  }
  bool hermitian() const;

  // Sign under the given outcome assignment; requires a Hermitian string.
  // true = negative.
  bool sign_on(std::uint64_t branch) const;

  char letter(int site) const;
  std::string letters(int n_sites) const;
  std::string to_string(int n_sites) const;  // e.g. "(-1)^{m0+m2} ZIZ"
};

}  // namespace lsmap
