#pragma once

// Fixed matrices: the Hamming unit, the Golay and 4x4 binary orthogonal
// matrices, and a Paley Hadamard matrix of order 12.

#include <stdexcept>
#include <string>
#include <vector>

#include "unitcodes/scheme.hpp"

namespace unitcodes {

struct NamedUnit {
  std::string name;
  UnitScheme scheme;
  std::string description;
};

/// U = (L; K) with L the Hamming generator (first row summed with the
/// others) and its printed inverse V.
inline NamedUnit hamming_unit() {
  const Field f = Field::gf(2);
  Mat u = Mat::from_ints(f, {{1, 1, 1, 1, 1, 1, 1},
                             {0, 1, 0, 0, 1, 0, 1},
                             {0, 0, 1, 0, 0, 1, 1},
                             {0, 0, 0, 1, 1, 1, 1},
                             {1, 0, 1, 1, 1, 0, 0},
                             {0, 1, 0, 0, 1, 1, 1},
                             {0, 0, 0, 1, 1, 1, 0}});
  Mat v = Mat::from_ints(f, {{0, 0, 1, 1, 1, 0, 0},
                             {1, 1, 0, 1, 1, 1, 1},
                             {0, 1, 1, 1, 0, 1, 1},
                             {1, 1, 0, 0, 1, 0, 1},
                             {1, 0, 0, 0, 1, 1, 0},
                             {0, 1, 0, 0, 0, 1, 0},
                             {0, 0, 0, 1, 0, 0, 1}});
  return {"hamming", UnitScheme(std::move(u), std::move(v)), "binary 7x7 unit whose first four rows generate the [7,4,3] Hamming code"};
}

/// Reverse circulant X[i][j] = a[(i+j) mod 12]; X = X^T, X^2 = I.
inline Mat golay_x() {
  static const int a[12] = {0, 1, 1, 0, 1, 1, 1, 1, 0, 1, 0, 0};
  std::vector<std::vector<long long>> rows(12, std::vector<long long>(12));
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) rows[i][j] = a[(i + j) % 12];
  return Mat::from_ints(Field::gf(2), rows);
}

inline NamedUnit golay_unit() {
  Mat x = golay_x();
  return {"golay", UnitScheme(x, x), "binary reverse circulant X with X^2 = I; (I, X) is the extended Golay [24,12,8] code"};
}

inline Mat binary_x4_matrix() {
  return Mat::from_ints(Field::gf(2), {{0, 1, 1, 1}, {1, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 1}});
}

inline NamedUnit binary_x4() {
  Mat x = binary_x4_matrix();
  return {"binary-x4", UnitScheme(x, x), "binary 4x4 X = X^T with X^2 = I"};
}

/// The same 4x4 matrix, named for the code (I_4, X).
inline NamedUnit extended_hamming_x() {
  Mat x = binary_x4_matrix();
  return {"extended-hamming", UnitScheme(x, x), "binary 4x4 X with (I, X) the extended Hamming [8,4,4] code"};
}

/// Paley type I Hadamard matrix from the quadratic residues mod 11,
/// normalised so the first row and column are all +1.
inline std::vector<std::vector<long long>> paley_hadamard12() {
  auto chi = [](int a) {
    a = ((a % 11) + 11) % 11;
    if (a == 0) return 0;
    int r = 1;
    for (int e = 0; e < 5; ++e) r = r * a % 11;
    return r == 1 ? 1 : -1;
  };
  std::vector<std::vector<long long>> h(12, std::vector<long long>(12));
  for (int j = 0; j < 12; ++j) h[0][j] = 1;
  for (int i = 1; i < 12; ++i) {
    h[i][0] = -1;
    for (int j = 1; j < 12; ++j) h[i][j] = chi(j - i) + (i == j ? 1 : 0);
  }
  for (int i = 1; i < 12; ++i)
    for (int j = 0; j < 12; ++j) h[i][j] = -h[i][j];
  return h;
}

/// H reduced into `f`, with entries +-1 mapped to 1 and p-1.
inline Mat hadamard12(const Field& f) {
  const auto c = f.characteristic();
  if (c == 2 || c == 3) throw std::domain_error("Hadamard codes need characteristic other than 2 or 3 (12 = 0 in " + f.literal() + ")");
  return Mat::from_ints(f, paley_hadamard12());
}

inline NamedUnit hadamard12_unit(const Field& f) {
  Mat h = hadamard12(f);
  return {"hadamard12", UnitScheme(h, transpose(h)), "Paley Hadamard H with H H^T = 12 I over " + f.literal()};
}

inline std::vector<std::string> named_units() { return {"hamming", "golay", "binary-x4", "extended-hamming", "hadamard12"}; }

/// Lookup by name; `field` is used only by hadamard12 (default GF(5)).
inline NamedUnit named_unit(const std::string& name, const Field& field = Field::gf(5)) {
  if (name == "hamming") return hamming_unit();
  if (name == "golay") return golay_unit();
  if (name == "binary-x4") return binary_x4();
  if (name == "extended-hamming") return extended_hamming_x();
  if (name == "hadamard12") return hadamard12_unit(field);
  throw std::invalid_argument("unknown named unit '" + name + "'");
}

}  // namespace unitcodes
