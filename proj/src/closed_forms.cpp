#include "sgq/closed_forms.hpp"

#include <functional>
#include <stdexcept>

#include "sgq/even_linalg.hpp"

namespace sgq {

namespace {

// Ungraded matrix: the candidates are written without regard to the
// grading (e.g. u * gamma41 pairs an even column index with an odd row
// index), so they are evaluated as plain arrays of ring elements.
struct Plain {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SuperElement> entries;
  SuperRingSpec ring;

  explicit Plain(const SuperMatrix& x) : rows(x.rows()), cols(x.cols()), entries(x.flat()), ring(x.ring()) {}
  Plain(SuperRingSpec ring_, std::size_t r, std::size_t c)
      : rows(r), cols(c), entries(r * c, SuperElement(ring_)), ring(std::move(ring_)) {}
};

struct NonConforming : std::runtime_error {
  NonConforming() : std::runtime_error("non-conforming dimensions") {}
};

Plain operator*(const Plain& a, const Plain& b) {
  if (a.cols != b.rows) throw NonConforming();
  Plain out(a.ring, a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < b.cols; ++j)
      for (std::size_t k = 0; k < a.cols; ++k) out.entries[i * b.cols + j] += a.entries[i * a.cols + k] * b.entries[k * b.cols + j];
  return out;
}

Plain operator-(Plain a, const Plain& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw NonConforming();
  for (std::size_t k = 0; k < a.entries.size(); ++k) a.entries[k] -= b.entries[k];
  return a;
}

Plain inv(const Plain& a) {
  if (a.rows != a.cols) throw NonConforming();
  Plain out(a.ring, a.rows, a.cols);
  out.entries = even::inverse(a.ring, a.rows, a.entries);
  return out;
}

bool same(const Plain& a, const SuperMatrix& b) {
  return a.rows == b.rows() && a.cols == b.cols() && a.entries == b.flat();
}

struct Candidate {
  int line;
  const char* symbol;
  const char* formula;
  const char* compared_to;
  const char* note;
};

}  // namespace

std::vector<ClosedFormCheck> check_closed_forms(const SuperMatrix& g, const BlockProfile& bp) {
  const CosetFactorization nf = normal_form(g, bp);
  auto G = [&](int i, int j) { return Plain(profile_block(g, bp, i, j)); };
  auto Pb = [&](int i, int j) { return profile_block(nf.p, bp, i, j); };
  const Plain u(nf.n.u()), xi(nf.n.xi());

  using Eval = std::function<Plain()>;
  struct Row {
    Candidate c;
    Eval eval;
    SuperMatrix target;
  };
  std::vector<Row> rows = {
      {{1, "a11", "g11", "p11", ""}, [&] { return G(1, 1); }, Pb(1, 1)},
      {{1, "a12", "g12", "p12", ""}, [&] { return G(1, 2); }, Pb(1, 2)},
      {{1, "alpha13", "gamma13", "p13", ""}, [&] { return G(1, 3); }, Pb(1, 3)},
      {{1, "alpha14", "gamma14", "p14", ""}, [&] { return G(1, 4); }, Pb(1, 4)},
      {{1, "alpha41", "gamma41", "p41", ""}, [&] { return G(4, 1); }, Pb(4, 1)},
      {{1, "a44", "g44", "p44", ""}, [&] { return G(4, 4); }, Pb(4, 4)},
      {{2, "a22", "g22 - u g12", "p22", "elimination gives g22 - u g12 - eta gamma42"},
       [&] { return G(2, 2) - u * G(1, 2); }, Pb(2, 2)},
      {{2, "alpha23", "gamma23 - u gamma13", "p23", "elimination gives gamma23 - u gamma13 - eta g43"},
       [&] { return G(2, 3) - u * G(1, 3); }, Pb(2, 3)},
      {{2, "alpha32", "gamma32 - xi g12", "p32", "elimination gives gamma32 - xi g12 - v gamma42"},
       [&] { return G(3, 2) - xi * G(1, 2); }, Pb(3, 2)},
      {{2, "a33", "g33 - xi gamma13", "p33", "elimination gives g33 - xi gamma13 - v g43"},
       [&] { return G(3, 3) - xi * G(1, 3); }, Pb(3, 3)},
      {{3, "eta", "(gamma24 - u gamma14) g44^-1", "eta", ""},
       [&] { return (G(2, 4) - u * G(1, 4)) * inv(G(4, 4)); }, nf.n.eta()},
      {{3, "eta (second)", "(gamma31 - u gamma41) g11^-1", "eta",
        "a second definition of eta; gamma31 lives in block (3,1), the position of xi"},
       [&] { return (G(3, 1) - u * G(4, 1)) * inv(G(1, 1)); }, nf.n.eta()},
      {{3, "eta (second)", "(gamma31 - u gamma41) g11^-1", "xi", "elimination gives xi = (gamma31 - v gamma41) g11^-1"},
       [&] { return (G(3, 1) - u * G(4, 1)) * inv(G(1, 1)); }, nf.n.xi()},
      {{4, "u", "(g21 - gamma24 g44^-1 gamma41)(g11 - gamma14 g44^-1 gamma41)^-1", "u", ""},
       [&] { return (G(2, 1) - G(2, 4) * inv(G(4, 4)) * G(4, 1)) * inv(G(1, 1) - G(1, 4) * inv(G(4, 4)) * G(4, 1)); },
       nf.n.u()},
      {{5, "v", "(g34 - gamma31 g11^-1 gamma14)(g44 - gamma41 g11^-1 gamma14)^-1", "v", ""},
       [&] { return (G(3, 4) - G(3, 1) * inv(G(1, 1)) * G(1, 4)) * inv(G(4, 4) - G(4, 1) * inv(G(1, 1)) * G(1, 4)); },
       nf.n.v()},
  };

  std::vector<ClosedFormCheck> out;
  out.reserve(rows.size());
  for (auto& row : rows) {
    ClosedFormCheck check;
    check.line = row.c.line;
    check.symbol = row.c.symbol;
    check.formula = row.c.formula;
    check.compared_to = row.c.compared_to;
    check.note = row.c.note;
    try {
      Plain value = row.eval();
      check.evaluable = true;
      check.matches = same(value, row.target);
    } catch (const NonConforming&) {
      check.evaluable = false;
      check.matches = false;
    }
    out.push_back(std::move(check));
  }
  return out;
}

std::vector<NotationIssue> notation_issues() {
  return {
      {"g, block (2,4)", "gamma34", "gamma24: odd block in row block 2, column block 4, as used by the u and eta formulas"},
      {"g, block (4,3)", "g34", "g43: block (3,4) already carries g34"},
      {"P, blocks (4,2) and (4,3)", "0",
       "free: the stabilizer of W only forces blocks (2,1), (3,1), (2,4), (3,4) to vanish; with row 4 of P "
       "restricted, n p = g is solvable only when gamma42 = 0 and g43 = 0"},
      {"line 3, second entry", "eta = (gamma31 - u gamma41) g11^-1",
       "not a definition of eta; the elimination gives xi = (gamma31 - v gamma41) g11^-1"},
      {"standard subspace", "epsilon_{n-s}, ..., epsilon_n (s+1 odd vectors)",
       "epsilon_{n-s+1}, ..., epsilon_n, the last s odd basis vectors, matching the block sizes"},
  };
}

nlohmann::json closed_form_report(const SuperMatrix& g, const BlockProfile& bp) {
  auto checks = check_closed_forms(g, bp);
  nlohmann::json report;
  report["profile"] = {{"m", bp.m}, {"n", bp.n}, {"r", bp.r}, {"s", bp.s}};
  bool first_line_ok = true;
  int mismatches = 0;
  auto& arr = report["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    if (c.line == 1 && !(c.evaluable && c.matches)) first_line_ok = false;
    if (!(c.evaluable && c.matches)) ++mismatches;
    arr.push_back({{"line", c.line},
                   {"symbol", c.symbol},
                   {"formula", c.formula},
                   {"compared_to", c.compared_to},
                   {"evaluable", c.evaluable},
                   {"matches", c.matches},
                   {"note", c.note}});
  }
  auto& notes = report["notation"] = nlohmann::json::array();
  for (const auto& n : notation_issues()) {
    notes.push_back({{"location", n.location}, {"written", n.written}, {"resolved", n.resolved}});
  }
  report["first_line_ok"] = first_line_ok;
  report["mismatches"] = mismatches;
  return report;
}

}  // namespace sgq
