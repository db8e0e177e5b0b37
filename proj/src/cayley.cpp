#include "fibrekit/cayley.hpp"

#include <algorithm>

#include "fibrekit/construct.hpp"
#include "fibrekit/errors.hpp"

namespace fibrekit {

RaagNormalForm::RaagNormalForm(const SimplicialComplex& l)
    : generators_(l.vertices()),
      commute_(generators_.size(), std::vector<bool>(generators_.size(), false)) {
  for (std::size_t a = 0; a < generators_.size(); ++a) {
    for (std::size_t b = 0; b < generators_.size(); ++b) {
      commute_[a][b] = a != b && l.adjacent(generators_[a], generators_[b]);
    }
  }
}

int RaagNormalForm::letter_key(int letter) {
  return 2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0);
}

Word RaagNormalForm::multiply(const Word& w, int letter) const {
  std::size_t g = static_cast<std::size_t>(std::abs(letter) - 1);
  if (g >= generators_.size()) throw InputError("letter outside the generating set");
  Word out = w;
  for (std::size_t step = 0; step < w.size(); ++step) {
    std::size_t p = w.size() - 1 - step;
    std::size_t h = static_cast<std::size_t>(std::abs(w[p]) - 1);
    if (h == g) {
      if (w[p] == -letter) {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(p));
        return lex_least(out);
      }
      break;
    }
    if (!commute_[g][h]) break;
  }
  out.push_back(letter);
  return lex_least(out);
}

Word RaagNormalForm::lex_least(const Word& reduced) const {
  Word rest = reduced;
  Word out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    std::size_t best = rest.size();
    for (std::size_t i = 0; i < rest.size(); ++i) {
      std::size_t g = static_cast<std::size_t>(std::abs(rest[i]) - 1);
      bool movable = true;
      for (std::size_t j = 0; j < i && movable; ++j) {
        std::size_t h = static_cast<std::size_t>(std::abs(rest[j]) - 1);
        movable = commute_[g][h];
      }
      if (!movable) continue;
      if (best == rest.size() || letter_key(rest[i]) < letter_key(rest[best])) best = i;
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

Word RaagNormalForm::normalize(const Word& w) const {
  Word out;
  for (int x : w) out = multiply(out, x);
  return out;
}

std::string CayleyBall::format(const Word& w) const {
  if (w.empty()) return "1";
  auto generators = complex.vertices();
  std::string s;
  for (int x : w) {
    if (!s.empty()) s += " ";
    s += complex.label(generators[static_cast<std::size_t>(std::abs(x) - 1)]);
    if (x < 0) s += "^-1";
  }
  return s;
}

LabeledGraph CayleyBall::graph() const {
  LabeledGraph g;
  for (const auto& w : elements) g.add_vertex(format(w));
  auto generators = complex.vertices();
  for (const auto& e : edges) g.add_edge(e.from, e.to, complex.label(generators[e.generator]));
  return g;
}

CayleyBall cayley_ball(const SimplicialComplex& l, std::size_t radius) {
  if (!is_flag(l)) throw PreconditionError("cayley_ball: L is not flag");
  check_radius(radius);
  RaagNormalForm nf(l);
  CayleyBall ball;
  ball.complex = l;
  ball.radius = radius;
  ball.elements.push_back({});
  ball.index[{}] = 0;
  std::size_t layer_begin = 0;
  int n = static_cast<int>(nf.generator_count());
  for (std::size_t r = 0; r < radius; ++r) {
    std::size_t layer_end = ball.elements.size();
    std::vector<Word> next;
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (int g = 1; g <= n; ++g) {
        for (int letter : {g, -g}) {
          Word w = nf.multiply(ball.elements[i], letter);
          if (w.size() == r + 1 && !ball.index.count(w)) {
            ball.index[w] = 0;
            next.push_back(std::move(w));
          }
        }
      }
    }
    std::sort(next.begin(), next.end(), [](const Word& a, const Word& b) {
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](int x, int y) {
        return RaagNormalForm::letter_key(x) < RaagNormalForm::letter_key(y);
      });
    });
    for (auto& w : next) {
      ball.index[w] = ball.elements.size();
      ball.elements.push_back(std::move(w));
    }
    layer_begin = layer_end;
  }

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_of;  // (from, generator)
  for (std::size_t i = 0; i < ball.elements.size(); ++i) {
    for (int g = 1; g <= n; ++g) {
      auto it = ball.index.find(nf.multiply(ball.elements[i], g));
      if (it == ball.index.end()) continue;
      edge_of[{i, static_cast<std::size_t>(g - 1)}] = ball.edges.size();
      ball.edges.push_back({i, it->second, static_cast<std::size_t>(g - 1)});
    }
  }
  for (std::size_t i = 0; i < ball.elements.size(); ++i) {
    for (std::size_t v = 0; v < nf.generator_count(); ++v) {
      for (std::size_t w = v + 1; w < nf.generator_count(); ++w) {
        if (!nf.commute(v, w)) continue;
        auto e0 = edge_of.find({i, v});
        auto e3 = edge_of.find({i, w});
        if (e0 == edge_of.end() || e3 == edge_of.end()) continue;
        std::size_t gv = ball.edges[e0->second].to;
        std::size_t gw = ball.edges[e3->second].to;
        auto e1 = edge_of.find({gv, w});
        auto e2 = edge_of.find({gw, v});
        if (e1 == edge_of.end() || e2 == edge_of.end()) continue;
        std::size_t gvw = ball.edges[e1->second].to;
        if (ball.edges[e2->second].to != gvw) throw InternalError("cayley_ball: square does not close");
        CayleyBall::Square sq;
        sq.corner[0] = i;
        sq.corner[1] = gv;
        sq.corner[2] = gvw;
        sq.corner[3] = gw;
        sq.edge[0] = e0->second;
        sq.edge[1] = e1->second;
        sq.edge[2] = e2->second;
        sq.edge[3] = e3->second;
        sq.v = v;
        sq.w = w;
        ball.squares.push_back(sq);
      }
    }
  }
  return ball;
}

}  // namespace fibrekit
