// Command-line front end.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sunic/analysis.hpp"
#include "sunic/boundary.hpp"
#include "sunic/perm.hpp"
#include "sunic/rec_system.hpp"
#include "sunic/word_syntax.hpp"

using namespace sunic;

namespace {

struct Ctx {
  std::string spec_path;
  std::string records_path;
  int jobs = 1;
  std::ostringstream records;
  SpecPtr spec() const { return load_spec_file(spec_path); }
};

// exit codes
constexpr int kOk = 0, kFailed = 1, kUsage = 2;

std::string yn(bool b) { return b ? "true" : "false"; }

int cmd_classify(Ctx& c) {
  auto r = classify(c.spec());
  std::cout << "polynomial  " << r.polynomial << " over F_" << r.p << "\n"
            << "faithful    " << yn(r.faithful) << "\n"
            << "degenerate  " << yn(r.degenerate) << "\n"
            << "torsion     " << (r.torsion ? yn(*r.torsion) : "n/a") << "\n"
            << "dihedral    " << (r.dihedral ? format_word(Element::b(c.spec(), *r.dihedral)) : "none") << "\n"
            << "x+1 | f     " << yn(r.x_plus_1) << "\n"
            << "maximals    " << (r.maximals ? std::to_string(*r.maximals) : "n/a") << "\n";
  c.records << r.records();
  return kOk;
}

int cmd_eval(Ctx& c, const std::string& word, const std::string& vertex) {
  auto s = c.spec();
  Element x = parse_word(s, word);
  auto wf = wreath(x);
  std::cout << "normal form  " << format_word(x) << "\n";
  std::cout << "trivial      " << yn(is_trivial(x)) << "\n";
  std::cout << "root         a^" << wf.root << "\n";
  for (std::size_t i = 0; i < wf.sections.size(); ++i)
    std::cout << "section " << i << "    " << format_word(wf.sections[i]) << "\n";
  c.records << "record=eval word=\"" << format_word(x) << "\" root=" << wf.root;
  if (!vertex.empty()) {
    Vertex v = parse_vertex(*s, vertex);
    std::string img = format_vertex(act_on_vertex(x, v));
    std::cout << "image        " << vertex << " -> " << img << "\n";
    c.records << " vertex=" << vertex << " image=" << img;
  }
  c.records << "\n";
  return kOk;
}

int cmd_equal(Ctx& c, const std::string& w1, const std::string& w2) {
  auto s = c.spec();
  bool eq = equal_in_group(parse_word(s, w1), parse_word(s, w2));
  std::cout << yn(eq) << "\n";
  c.records << "record=equal result=" << yn(eq) << "\n";
  return kOk;
}

int cmd_order(Ctx& c, const std::string& word, std::uint64_t bound) {
  auto s = c.spec();
  auto r = order_probe(parse_word(s, word), bound);
  if (r.finite)
    std::cout << "order " << r.order << "\n";
  else
    std::cout << "no p-power order <= " << bound << "\n";
  c.records << "record=order finite=" << yn(r.finite) << " order=" << (r.finite ? std::to_string(r.order) : "none")
            << " bound=" << bound << "\n";
  return kOk;
}

int cmd_levels(Ctx& c, int max) {
  auto s = c.spec();
  std::cout << "n  log_p|G_n|  |G_n|\n";
  for (int n = 1; n <= max; ++n) {
    const PermChain& ch = group_chain(s, n, c.jobs);
    std::cout << n << "  " << ch.log_order() << "  " << ch.order() << "\n";
    c.records << "record=level n=" << n << " order=" << ch.order() << " log_order=" << ch.log_order() << "\n";
  }
  return kOk;
}

int cmd_density(Ctx& c, std::int64_t q, int max) {
  auto s = c.spec();
  auto h = hq(s, q);
  bool all = true;
  std::cout << "n  |G_n|  |H_n|  dense\n";
  for (int n = 1; n <= max; ++n) {
    auto r = density_check(s, h.subgroup(), n, c.jobs);
    all = all && r.dense();
    std::cout << n << "  " << r.order_group << "  " << r.order_sub << "  " << yn(r.dense()) << "\n";
    c.records << "record=density q=" << q << " n=" << n << " order_group=" << r.order_group
              << " order_sub=" << r.order_sub << " dense=" << yn(r.dense()) << "\n";
  }
  return all ? kOk : kFailed;
}

int cmd_proper(Ctx& c, std::int64_t q) {
  auto r = hq_properness_certificate(c.spec(), q);
  std::cout << r.verdict << "\n";
  if (r.passed) std::cout << "witness: z_action(ab,0)=1 (" << r.witness << ")\n";
  std::cout << "checks: " << r.checks << " over n in [" << -3 * q << ", " << 3 * q << "]\n";
  c.records << "record=proper q=" << q << " status=" << r.verdict << " checks=" << r.checks << "\n";
  return r.passed ? kOk : kFailed;
}

int cmd_schreier(Ctx& c, int radius, const std::string& center, const std::string& dot) {
  auto s = c.spec();
  Ray ctr = center.empty() ? constant_ray(*s) : parse_ray(*s, center);
  auto ball = schreier_ball(s, ctr, radius);
  for (std::size_t i = 0; i < ball.vertices.size(); ++i)
    std::cout << i << "  d=" << ball.distance[i] << "  " << format_ray(ball.vertices[i]) << "\n";
  std::cout << ball.edges.size() << " edges\n";
  if (!dot.empty()) {
    std::ofstream out(dot);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + dot);
    out << ball.to_dot();
  }
  c.records << "record=schreier center=" << format_ray(ctr) << " radius=" << radius
            << " vertices=" << ball.vertices.size() << " edges=" << ball.edges.size() << "\n";
  return kOk;
}

int cmd_conjugator(Ctx& c, std::int64_t q, int depth) {
  auto s = c.spec();
  auto g = build_conjugator(s, q);
  std::cout << g.describe();
  Element a = Element::a(s), b = witness_element(s);
  bool all = true;
  auto run = [&](const std::string& name, const Element& x, const Element& y) {
    bool ok = conjugation_check(g, x, y, depth);
    all = all && ok;
    std::cout << name << "  " << (ok ? "pass" : "FAIL") << "\n";
    c.records << "record=conjugator q=" << q << " depth=" << depth << " item=\"" << name << "\" status="
              << (ok ? "pass" : "fail") << "\n";
  };
  run("g^-1 (ab)^q b g = a", (a * b).pow(q) * b, a);
  for (std::size_t i = 0; i < s->m(); ++i) {
    Element x = Element::basis(s, i);
    run("g^-1 " + format_word(x) + " g = " + format_word(x), x, x);
  }
  return all ? kOk : kFailed;
}

int cmd_theta(Ctx& c, const std::string& word, int iters) {
  auto s = c.spec();
  Element z = parse_word(s, word);
  auto r = theta_stabilize(z, iters);
  std::cout << 0 << "  |B|=" << b_length(z) << "  " << format_word(z) << "\n";
  for (std::size_t i = 0; i < r.trace.size(); ++i)
    std::cout << i + 1 << "  |B|=" << b_length(r.trace[i]) << "  " << format_word(r.trace[i]) << "\n";
  std::cout << "class " << to_string(r.cls);
  if (r.cls == ThetaClass::AxaBaX || r.cls == ThetaClass::BaPower) std::cout << " l=" << r.l;
  std::cout << "\nnonincreasing " << yn(r.length_nonincreasing) << "\n";
  c.records << "record=theta class=" << to_string(r.cls) << " l=" << r.l << " steps=" << r.trace.size()
            << " nonincreasing=" << yn(r.length_nonincreasing) << "\n";
  return r.cls == ThetaClass::Unstabilized ? kFailed : kOk;
}

int cmd_verify(Ctx& c) {
  auto r = verify_suite(c.spec(), c.jobs);
  for (const auto& i : r.items) {
    std::cout << (i.status == "pass" ? "pass" : i.status == "skip" ? "skip" : "FAIL") << "  " << i.item;
    if (!i.witness.empty()) std::cout << "  [" << i.witness << "]";
    std::cout << "\n";
  }
  c.records << r.records();
  return r.passed() ? kOk : kFailed;
}

int cmd_maximals(Ctx& c) {
  auto s = c.spec();
  auto r = count_finite_index_maximals(s);
  std::cout << r.count << " maximal subgroups of finite index (index " << s->p() << "), from "
            << r.nonzero_functionals << " nonzero functionals on A x B\n";
  for (const auto& d : r.subgroups) {
    std::cout << "  functional (";
    for (std::size_t i = 0; i < d.functional.size(); ++i) std::cout << (i ? "," : "") << d.functional[i];
    std::cout << ")  " << d.recipe << "\n";
  }
  c.records << "record=maximals count=" << r.count << " nonzero_functionals=" << r.nonzero_functionals << "\n";
  return kOk;
}

int cmd_reduce(Ctx& c, std::int64_t q, const std::string& word, int steps) {
  auto s = c.spec();
  auto tr = reduction_trace(s, q, parse_word(s, word), steps);
  std::cout << "HEURISTIC: H(q) membership is screened by the Z-action (necessary condition only)\n";
  for (const auto& st : tr.steps) {
    std::cout << "depth " << st.depth << "  lambda_hat=" << st.form.lambda_hat << "  core=" << format_word(st.form.core)
              << "  [" << st.screen << "]" << (st.bound_ok ? "" : "  bound violated") << "\n";
    c.records << "record=reduce q=" << q << " depth=" << st.depth << " lambda_hat=" << st.form.lambda_hat
              << " screen=\"" << st.screen << "\" bound_ok=" << yn(st.bound_ok) << "\n";
  }
  std::cout << (tr.reached ? "reached lambda_hat <= 3" : "step limit hit") << "\n";
  return tr.reached && tr.bounds_ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computations in the groups G_{p,f} acting on the p-regular rooted tree"};
  app.require_subcommand(1);
  app.fallthrough();
  Ctx c;
  app.add_option("--records", c.records_path, "write key=value records to this file");
  app.add_option("--jobs", c.jobs, "threads for level evaluation")->check(CLI::Range(1, 256));

  std::string w1, w2, vertex, center, dot;
  std::uint64_t bound = 1024;
  int max = 5, radius = 3, depth = 12, iters = 64, steps = 50;
  std::int64_t q = 3;
  int rc = kOk;

  auto spec_arg = [&](CLI::App* sub) { sub->add_option("spec", c.spec_path, "group spec file")->required(); };

  auto* classify_c = app.add_subcommand("classify", "torsion, dihedral witness, maximal count");
  spec_arg(classify_c);
  classify_c->callback([&] { rc = cmd_classify(c); });

  auto* eval_c = app.add_subcommand("eval", "normal form, sections and vertex image of a word");
  spec_arg(eval_c);
  eval_c->add_option("word", w1)->required();
  eval_c->add_option("--vertex", vertex);
  eval_c->callback([&] { rc = cmd_eval(c, w1, vertex); });

  auto* equal_c = app.add_subcommand("equal", "decide w1 == w2");
  spec_arg(equal_c);
  equal_c->add_option("w1", w1)->required();
  equal_c->add_option("w2", w2)->required();
  equal_c->callback([&] { rc = cmd_equal(c, w1, w2); });

  auto* order_c = app.add_subcommand("order", "order of a word up to a p-power bound");
  spec_arg(order_c);
  order_c->add_option("word", w1)->required();
  order_c->add_option("--bound", bound);
  order_c->callback([&] { rc = cmd_order(c, w1, bound); });

  auto* levels_c = app.add_subcommand("levels", "orders of the level quotients");
  spec_arg(levels_c);
  levels_c->add_option("--max", max);
  levels_c->callback([&] { rc = cmd_levels(c, max); });

  auto* density_c = app.add_subcommand("density", "compare H(q) and G on levels 1..max");
  spec_arg(density_c);
  density_c->add_option("--q", q);
  density_c->add_option("--max", max);
  density_c->callback([&] { rc = cmd_density(c, q, max); });

  auto* proper_c = app.add_subcommand("proper", "properness certificate for H(q)");
  spec_arg(proper_c);
  proper_c->add_option("--q", q);
  proper_c->callback([&] { rc = cmd_proper(c, q); });

  auto* schreier_c = app.add_subcommand("schreier", "Schreier graph ball on the boundary");
  spec_arg(schreier_c);
  schreier_c->add_option("--radius", radius)->check(CLI::NonNegativeNumber);
  schreier_c->add_option("--center", center, "ray u(v); default (p-1)^infinity");
  schreier_c->add_option("--dot", dot);
  schreier_c->callback([&] { rc = cmd_schreier(c, radius, center, dot); });

  auto* conj_c = app.add_subcommand("conjugator", "check the conjugator of H(q) onto G");
  spec_arg(conj_c);
  conj_c->add_option("--q", q);
  conj_c->add_option("--depth", depth);
  conj_c->callback([&] { rc = cmd_conjugator(c, q, depth); });

  auto* theta_c = app.add_subcommand("theta", "iterate the theta map on an element of G'");
  spec_arg(theta_c);
  theta_c->add_option("word", w1)->required();
  theta_c->add_option("--iters", iters);
  theta_c->callback([&] { rc = cmd_theta(c, w1, iters); });

  auto* verify_c = app.add_subcommand("verify", "identity, stabilizer, branch, density and properness suites");
  spec_arg(verify_c);
  verify_c->callback([&] { rc = cmd_verify(c); });

  auto* max_c = app.add_subcommand("maximals", "maximal subgroups of finite index");
  spec_arg(max_c);
  max_c->callback([&] { rc = cmd_maximals(c); });

  auto* reduce_c = app.add_subcommand("reduce", "lambda-length reduction trace for a non-member of H(q)");
  spec_arg(reduce_c);
  reduce_c->add_option("--q", q);
  reduce_c->add_option("word", w1)->required();
  reduce_c->add_option("--max-steps", steps);
  reduce_c->callback([&] { rc = cmd_reduce(c, q, w1, steps); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? kOk : kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    auto k = e.kind();
    bool usage = k == ErrorKind::ParseError || k == ErrorKind::InvalidArgument || k == ErrorKind::NonPrimeP ||
                 k == ErrorKind::NonInvertiblePolynomial || k == ErrorKind::EmptyPolynomial ||
                 k == ErrorKind::SpecTooLarge;
    return usage ? kUsage : kFailed;
  }
  if (!c.records_path.empty()) {
    std::ofstream out(c.records_path);
    if (!out) {
      std::cerr << "error: cannot write " << c.records_path << "\n";
      return kUsage;
    }
    out << c.records.str();
  }
  return rc;
}
