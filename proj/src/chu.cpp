#include "nucleus/chu.hpp"

#include <istream>
#include <stdexcept>

#include <json.hpp>

namespace chu {

Report validate_chu(const ChuSpace& x) {
  Report rep;
  if (static_cast<int>(x.matrix.size()) != x.n_a()) {
    rep.push_back({"chu-shape", "row count"});
    return rep;
  }
  for (const auto& row : x.matrix) {
    if (static_cast<int>(row.size()) != x.n_b()) {
      rep.push_back({"chu-shape", "column count"});
      return rep;
    }
    for (int v : row)
      if (v < 0 || v >= static_cast<int>(x.R.size())) {
        rep.push_back({"chu-alphabet", "entry out of range"});
        return rep;
      }
  }
  return rep;
}

bool is_separated(const ChuSpace& x) {
  for (int a = 0; a < x.n_a(); ++a)
    for (int a2 = a + 1; a2 < x.n_a(); ++a2)
      if (x.matrix[a] == x.matrix[a2]) return false;
  return true;
}

bool is_extensional(const ChuSpace& x) {
  for (int b = 0; b < x.n_b(); ++b)
    for (int b2 = b + 1; b2 < x.n_b(); ++b2) {
      bool same = true;
      for (int a = 0; a < x.n_a() && same; ++a)
        if (x.matrix[a][b] != x.matrix[a][b2]) same = false;
      if (same) return false;
    }
  return true;
}

Report check_chu_morphism(const ChuSpace& phi, const ChuSpace& psi, const ChuMorphism& m) {
  Report rep;
  if (static_cast<int>(m.f_left.size()) != phi.n_a() || static_cast<int>(m.f_right.size()) != psi.n_b()) {
    rep.push_back({"chu-morphism-shape", "map arities"});
    return rep;
  }
  for (int a = 0; a < phi.n_a(); ++a)
    if (m.f_left[a] < 0 || m.f_left[a] >= psi.n_a()) {
      rep.push_back({"chu-morphism-range", phi.A[a]});
      return rep;
    }
  for (int d = 0; d < psi.n_b(); ++d)
    if (m.f_right[d] < 0 || m.f_right[d] >= phi.n_b()) {
      rep.push_back({"chu-morphism-range", psi.B[d]});
      return rep;
    }
  for (int a = 0; a < phi.n_a(); ++a)
    for (int d = 0; d < psi.n_b(); ++d)
      if (phi.matrix[a][m.f_right[d]] != psi.matrix[m.f_left[a]][d])
        rep.push_back({"chu-adjointness (Φ(a,f̌d) = Ψ(f̂a,d))", phi.A[a] + "," + psi.B[d]});
  return rep;
}

namespace {

// quotient duplicate rows, representatives at least index
ChuSpace merge_rows(const ChuSpace& x, std::vector<int>* rep_of = nullptr) {
  ChuSpace out;
  out.B = x.B;
  out.R = x.R;
  std::vector<int> reps;
  std::vector<int> cls(x.n_a(), -1);
  for (int a = 0; a < x.n_a(); ++a) {
    for (size_t k = 0; k < reps.size(); ++k)
      if (x.matrix[a] == x.matrix[reps[k]]) { cls[a] = static_cast<int>(k); break; }
    if (cls[a] < 0) {
      cls[a] = static_cast<int>(reps.size());
      reps.push_back(a);
    }
  }
  for (int r : reps) {
    out.A.push_back(x.A[r]);
    out.matrix.push_back(x.matrix[r]);
  }
  if (rep_of) *rep_of = cls;
  return out;
}

ChuSpace merge_cols(const ChuSpace& x, std::vector<int>* reps_out = nullptr) {
  ChuSpace out;
  out.A = x.A;
  out.R = x.R;
  std::vector<int> reps;
  auto col = [&](int b) {
    std::vector<int> c(x.n_a());
    for (int a = 0; a < x.n_a(); ++a) c[a] = x.matrix[a][b];
    return c;
  };
  for (int b = 0; b < x.n_b(); ++b) {
    bool dup = false;
    for (int r : reps)
      if (col(b) == col(r)) { dup = true; break; }
    if (!dup) reps.push_back(b);
  }
  for (int r : reps) out.B.push_back(x.B[r]);
  out.matrix.assign(x.n_a(), std::vector<int>(reps.size()));
  for (int a = 0; a < x.n_a(); ++a)
    for (size_t k = 0; k < reps.size(); ++k) out.matrix[a][k] = x.matrix[a][reps[k]];
  if (reps_out) *reps_out = reps;
  return out;
}

bool chu_isomorphic(const ChuSpace& x, const ChuSpace& y) {
  // exact: same dimensions and a permutation pair matching the matrices;
  // reductions keep original labels, so try label-respecting match first.
  if (x.n_a() != y.n_a() || x.n_b() != y.n_b() || x.R != y.R) return false;
  std::vector<int> pa(x.n_a(), -1), pb(x.n_b(), -1);
  for (int a = 0; a < x.n_a(); ++a)
    for (int a2 = 0; a2 < y.n_a(); ++a2)
      if (x.A[a] == y.A[a2]) pa[a] = a2;
  for (int b = 0; b < x.n_b(); ++b)
    for (int b2 = 0; b2 < y.n_b(); ++b2)
      if (x.B[b] == y.B[b2]) pb[b] = b2;
  for (int v : pa)
    if (v < 0) return false;
  for (int v : pb)
    if (v < 0) return false;
  for (int a = 0; a < x.n_a(); ++a)
    for (int b = 0; b < x.n_b(); ++b)
      if (x.matrix[a][b] != y.matrix[pa[a]][pb[b]]) return false;
  return true;
}

}  // namespace

SeReduction se_reduce(const ChuSpace& x) {
  SeReduction out;
  Report valid = validate_chu(x);
  if (!valid.empty()) {
    out.report = valid;
    return out;
  }
  std::vector<int> row_cls;
  ChuSpace rows = merge_rows(x, &row_cls);
  std::vector<int> col_reps;
  out.rows_first = merge_cols(rows, &col_reps);

  ChuSpace cols = merge_cols(x);
  out.cols_first = merge_rows(cols);

  out.orders_isomorphic = chu_isomorphic(out.rows_first, out.cols_first);
  if (!out.orders_isomorphic)
    out.report.push_back({"se-order-independence (A'≅A'' and B'≅B'')", "reduction orders differ"});

  out.reduced = out.rows_first;
  // reduction morphism (f_left : A -> A', f_right : B' -> B)
  out.to_reduced.f_left = row_cls;
  out.to_reduced.f_right = col_reps;
  Report mrep = check_chu_morphism(x, out.reduced, out.to_reduced);
  for (auto& v : mrep) out.report.push_back({"se-reduction-morphism/" + v.law, v.location});
  if (!is_separated(out.reduced)) out.report.push_back({"se-separated", "duplicate rows survive"});
  if (!is_extensional(out.reduced)) out.report.push_back({"se-extensional", "duplicate columns survive"});
  return out;
}

ChuSpace parse_chu_json(std::istream& in) {
  nlohmann::json j;
  in >> j;
  ChuSpace x;
  for (const auto& v : j.at("A")) x.A.push_back(v.get<std::string>());
  for (const auto& v : j.at("B")) x.B.push_back(v.get<std::string>());
  for (const auto& v : j.at("R")) x.R.push_back(v.get<std::string>());
  for (const auto& row : j.at("matrix")) {
    std::vector<int> r;
    for (const auto& v : row) r.push_back(v.get<int>());
    x.matrix.push_back(r);
  }
  auto rep = validate_chu(x);
  if (!rep.empty()) throw std::runtime_error("chu: " + fincat::report_to_string(rep));
  return x;
}

std::string reduction_to_json(const ChuSpace& input, const SeReduction& r) {
  nlohmann::ordered_json out;
  auto dump_space = [](const ChuSpace& s) {
    nlohmann::ordered_json j;
    j["A"] = s.A;
    j["B"] = s.B;
    j["R"] = s.R;
    j["matrix"] = s.matrix;
    return j;
  };
  out["space"] = dump_space(r.reduced);
  nlohmann::ordered_json fl = nlohmann::ordered_json::object();
  for (int a = 0; a < input.n_a(); ++a) fl[input.A[a]] = r.reduced.A[r.to_reduced.f_left[a]];
  out["f_left"] = fl;
  nlohmann::ordered_json fr = nlohmann::ordered_json::object();
  for (int b = 0; b < r.reduced.n_b(); ++b) fr[r.reduced.B[b]] = input.B[r.to_reduced.f_right[b]];
  out["f_right"] = fr;
  out["separated"] = is_separated(r.reduced);
  out["extensional"] = is_extensional(r.reduced);
  return out.dump(2) + "\n";
}

}  // namespace chu
