// Finite Chu spaces over a finite alphabet and their separated-extensional
// reduction through the surjection/injection factorization, computed in
// both orders and cross-checked.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nucleus/fincat.hpp"  // Report

namespace chu {

using fincat::Report;

struct ChuSpace {
  std::vector<std::string> A;
  std::vector<std::string> B;
  std::vector<std::string> R;            // alphabet
  std::vector<std::vector<int>> matrix;  // matrix[a][b] indexes into R

  int n_a() const { return static_cast<int>(A.size()); }
  int n_b() const { return static_cast<int>(B.size()); }
};

Report validate_chu(const ChuSpace& x);

bool is_separated(const ChuSpace& x);    // row map injective
bool is_extensional(const ChuSpace& x);  // column map injective

struct ChuMorphism {
  std::vector<int> f_left;   // A -> C
  std::vector<int> f_right;  // D -> B
};

// Φ(a, f_right(d)) = Ψ(f_left(a), d) at every (a, d)
Report check_chu_morphism(const ChuSpace& phi, const ChuSpace& psi, const ChuMorphism& m);

struct SeReduction {
  ChuSpace reduced;
  ChuMorphism to_reduced;    // (A -> A', B' -> B): the morphism Φ -> Φ'
  // the two reduction orders, kept for the cross-check
  ChuSpace rows_first;
  ChuSpace cols_first;
  bool orders_isomorphic = false;
  Report report;
};

// quotient duplicate rows and duplicate columns (least index represents a
// class); both orders computed and verified to agree.
SeReduction se_reduce(const ChuSpace& x);

ChuSpace parse_chu_json(std::istream& in);
std::string reduction_to_json(const ChuSpace& input, const SeReduction& r);

}  // namespace chu
