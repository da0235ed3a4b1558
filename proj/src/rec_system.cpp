#include "sunic/rec_system.hpp"

#include <set>
#include <sstream>

#include "sunic/word_syntax.hpp"

namespace sunic {

RecSystem::RecSystem(SpecPtr spec, std::vector<RecEquation> eqs, std::size_t root_symbol)
    : spec_(std::move(spec)), eqs_(std::move(eqs)), root_(root_symbol) {
  if (root_ >= eqs_.size()) throw Error(ErrorKind::InvalidArgument, "root symbol undefined");
  for (const auto& e : eqs_) {
    if (e.words.size() != spec_->p() || e.next.size() != spec_->p())
      throw Error(ErrorKind::InvalidArgument, "equation " + e.name + " needs p sections");
    for (auto j : e.next)
      if (j >= eqs_.size()) throw Error(ErrorKind::InvalidArgument, "undefined symbol in " + e.name);
  }
}

std::string RecSystem::describe() const {
  std::ostringstream os;
  for (const auto& e : eqs_) {
    os << e.name << " = ";
    if (e.root) os << "a^" << e.root << ' ';
    os << '(';
    for (std::size_t x = 0; x < e.words.size(); ++x) {
      if (x) os << ", ";
      if (!e.words[x].empty()) os << '(' << format_word(e.words[x]) << ") ";
      os << eqs_[e.next[x]].name;
    }
    os << ")\n";
  }
  return os.str();
}

RecSystem build_conjugator(const SpecPtr& spec, std::int64_t q) {
  if (q % 2 == 0) throw Error(ErrorKind::EvenQ, "q must be odd");
  if (q < 3) throw Error(ErrorKind::InvalidArgument, "q must be >= 3");
  Element b = witness_element(spec);
  Element ba = b * Element::a(spec);
  RecEquation g{"G0", 0, {ba.pow((q - 1) / 2), Element::identity(spec)}, {0, 0}};
  return RecSystem(spec, {g});
}

namespace {

struct State {
  std::vector<Letter> residual;
  std::size_t symbol;
  bool operator<(const State& o) const {
    return symbol != o.symbol ? symbol < o.symbol : residual < o.residual;
  }
};

// (u S)(x v) = u(y) . (u_y w_x S_j)(v) with y = sigma_S(x).
State step(const RecSystem& r, const State& st, Fp x, Fp& out_digit) {
  const auto& s = *r.spec();
  const auto& eq = r.equations()[st.symbol];
  Fp y = (x + eq.root) % s.p();
  Element u(r.spec(), st.residual);
  out_digit = (y + u.root()) % s.p();
  Element next = section_at(u, {y}) * eq.words[x];
  return State{next.letters(), eq.next[x]};
}

class Unfolder {
 public:
  Unfolder(const RecSystem& r, int n) : r_(r), seen_(n + 1) {}

  const Perm& perm(const State& st, int n) {
    auto key = std::make_pair(n, st);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    seen_[n].emplace(st);
    const Fp p = r_.spec()->p();
    std::uint32_t child = 1;
    for (int i = 1; i < n; ++i) child *= p;
    Perm out(n == 0 ? 1 : child * p);
    if (n == 0) {
      out[0] = 0;
    } else {
      for (Fp x = 0; x < p; ++x) {
        Fp d;
        State next = step(r_, st, x, d);
        const Perm& sub = perm(next, n - 1);
        for (std::uint32_t i = 0; i < child; ++i) out[x * child + i] = d * child + sub[i];
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  std::vector<std::size_t> counts(int n) const {
    std::vector<std::size_t> c;
    for (int k = n - 1; k >= 0; --k) c.push_back(seen_[k].size());
    return c;
  }

 private:
  const RecSystem& r_;
  std::map<std::pair<int, State>, Perm> memo_;
  std::vector<std::set<State>> seen_;
};

}  // namespace

Vertex rec_act_on_vertex(const RecSystem& r, const Vertex& v) {
  State st{{}, r.root_symbol()};
  Vertex out;
  for (Fp x : v) {
    Fp d;
    st = step(r, st, x, d);
    out.push_back(d);
  }
  return out;
}

RecLevelResult rec_level_perm(const RecSystem& r, int n) {
  level_size(*r.spec(), n);
  Unfolder u(r, n);
  RecLevelResult res;
  res.perm = u.perm(State{{}, r.root_symbol()}, n);
  res.states_per_level = u.counts(n);
  return res;
}

bool conjugation_check(const RecSystem& r, const Element& x, const Element& y, int depth) {
  if (!x.spec()->same_group(*r.spec()) || !y.spec()->same_group(*r.spec()))
    throw Error(ErrorKind::SpecMismatch, "elements and system differ in group");
  Perm g = rec_level_perm(r, depth).perm;
  LevelEvaluator ev(r.spec(), depth);
  Perm lhs = perm_compose(perm_inverse(g), perm_compose(ev.eval(x), g));
  return lhs == ev.eval(y);
}

}  // namespace sunic
