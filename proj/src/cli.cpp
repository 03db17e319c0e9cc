// SPDX-License-Identifier: Apache-2.0
#include "lapmult/cli.hpp"

#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lapmult/spectra.hpp"

namespace lapmult::cli {

namespace {

using nlohmann::json;
using qform::Form;

// All numbers in JSON output are decimal strings so arbitrary precision
// survives any consumer.
std::string jnum(const Int& v) { return v.get_str(); }
std::string jnum(long v) { return std::to_string(v); }
std::string jrat(const Rat& v) { return v.get_str(); }

json jform(const Form& f) {
  return {{"a", jnum(f.a)},
          {"b", jnum(f.b)},
          {"c", jnum(f.c)},
          {"delta", jnum(f.b * f.b - 4 * f.a * f.c)}};
}

json jmap(const qform::UnimodularMap& m) {
  return {{"p", jnum(m.p)}, {"q", jnum(m.q)}, {"r", jnum(m.r)}, {"s", jnum(m.s)}};
}

json jsolutions(const std::vector<std::pair<Int, Int>>& sols) {
  json arr = json::array();
  for (const auto& [x, y] : sols) arr.push_back({jnum(x), jnum(y)});
  return arr;
}

std::string solutions_text(const std::vector<std::pair<Int, Int>>& sols) {
  std::string out;
  for (const auto& [x, y] : sols) {
    if (!out.empty()) out += " ";
    out += "(" + x.get_str() + "," + y.get_str() + ")";
  }
  return out;
}

struct Ctx {
  bool json_mode = false;
  Int bound{1'000'000};
  long box = 15;
  std::ostream* out = nullptr;
  std::function<void()> action;

  void emit(const json& j, const std::string& text) const {
    if (json_mode)
      *out << j.dump() << "\n";
    else
      *out << text << "\n";
  }
};

Int parse_int_arg(const std::string& s, const char* what) {
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    throw domain_error(std::string("invalid integer for ") + what + ": " + s);
  }
}

std::vector<Int> parse_int_list(const std::string& s, const char* what) {
  std::vector<Int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int_arg(item, what));
  return out;
}

void add_qform_commands(CLI::App& app, Ctx& ctx) {
  auto* grp = app.add_subcommand("qform", "binary quadratic form operations");
  grp->require_subcommand(1);

  {
    auto* c = grp->add_subcommand("reduce", "reduced representative with map");
    auto form = std::make_shared<std::string>();
    c->add_option("--form", *form, "form a,b,c")->required();
    c->callback([&ctx, form] {
      ctx.action = [&ctx, form] {
        auto red = qform::reduce(qform::parse_form(*form));
        ctx.emit(json{{"reduced", jform(red.reduced)}, {"map", jmap(red.map)}},
                 qform::form_str(red.reduced));
      };
    });
  }
  {
    auto* c = grp->add_subcommand("classgroup", "reduced forms of a discriminant");
    auto delta = std::make_shared<std::string>();
    c->add_option("--delta", *delta, "negative discriminant")->required();
    c->callback([&ctx, delta] {
      ctx.action = [&ctx, delta] {
        auto forms = qform::class_group(parse_int_arg(*delta, "--delta"));
        json arr = json::array();
        std::string text = "h=" + std::to_string(forms.size());
        for (const auto& f : forms) {
          arr.push_back(jform(f));
          text += "\n" + qform::form_str(f);
        }
        ctx.emit(json{{"delta", *delta},
                      {"h", jnum(static_cast<long>(forms.size()))},
                      {"forms", arr}},
                 text);
      };
    });
  }
  {
    auto* c = grp->add_subcommand("compose", "Gaussian composition");
    auto f = std::make_shared<std::string>();
    auto g = std::make_shared<std::string>();
    c->add_option("--form", *f, "first form a,b,c")->required();
    c->add_option("--with", *g, "second form a,b,c")->required();
    c->callback([&ctx, f, g] {
      ctx.action = [&ctx, f, g] {
        Form r = qform::compose(qform::parse_form(*f), qform::parse_form(*g));
        ctx.emit(json{{"result", jform(r)}}, qform::form_str(r));
      };
    });
  }
  {
    auto* c = grp->add_subcommand("aut", "automorphism group");
    auto form = std::make_shared<std::string>();
    c->add_option("--form", *form, "form a,b,c")->required();
    c->callback([&ctx, form] {
      ctx.action = [&ctx, form] {
        Form f = qform::parse_form(*form);
        auto proper = qform::proper_automorphisms(f);
        auto improper = qform::improper_automorphism(f);
        json arr = json::array();
        for (const auto& m : proper) arr.push_back(jmap(m));
        json j{{"proper_order", jnum(static_cast<long>(proper.size()))},
               {"proper", arr},
               {"improper", improper ? jmap(*improper) : json(nullptr)}};
        std::string text = "proper order " + std::to_string(proper.size()) +
                           (improper ? ", improper exists" : ", no improper");
        ctx.emit(j, text);
      };
    });
  }
  {
    auto* c = grp->add_subcommand("ambiguous", "class of order <= 2?");
    auto form = std::make_shared<std::string>();
    c->add_option("--form", *form, "form a,b,c")->required();
    c->callback([&ctx, form] {
      ctx.action = [&ctx, form] {
        bool amb = qform::is_ambiguous(qform::parse_form(*form));
        ctx.emit(json{{"ambiguous", amb}}, amb ? "true" : "false");
      };
    });
  }
}

void add_count_commands(CLI::App& app, Ctx& ctx) {
  auto* grp = app.add_subcommand("count", "representation counting");
  grp->require_subcommand(1);

  {
    auto* c = grp->add_subcommand("reps", "representations of n by a form");
    auto form = std::make_shared<std::string>();
    auto n = std::make_shared<std::string>();
    c->add_option("--form", *form, "form a,b,c")->required();
    c->add_option("--n", *n, "target integer >= 0")->required();
    c->callback([&ctx, form, n] {
      ctx.action = [&ctx, form, n] {
        auto rs = repcount::representations(qform::parse_form(*form),
                                            parse_int_arg(*n, "--n"));
        json j{{"target", jnum(rs.target)},
               {"R", jnum(rs.R)},
               {"r_plus", jnum(rs.r_plus)},
               {"r_full", jnum(rs.r_full)},
               {"primitive_count", jnum(rs.primitive_count)},
               {"solutions", jsolutions(rs.solutions)}};
        ctx.emit(j, "R=" + std::to_string(rs.R) +
                        " r+=" + std::to_string(rs.r_plus) +
                        " r=" + std::to_string(rs.r_full) + " " +
                        solutions_text(rs.solutions));
      };
    });
  }
  {
    auto* c = grp->add_subcommand("histogram", "tally of counts over 1..nmax");
    auto form = std::make_shared<std::string>();
    auto nmax = std::make_shared<std::string>();
    c->add_option("--form", *form, "form a,b,c")->required();
    c->add_option("--nmax", *nmax, "upper level")->required();
    c->callback([&ctx, form, nmax] {
      ctx.action = [&ctx, form, nmax] {
        auto h = witness::multiplicity_histogram(qform::parse_form(*form),
                                                 parse_int_arg(*nmax, "--nmax"));
        json obj = json::object();
        std::string text;
        for (const auto& [count, freq] : h) {
          obj[std::to_string(count)] = jnum(freq);
          if (!text.empty()) text += "\n";
          text += std::to_string(count) + " " + std::to_string(freq);
        }
        ctx.emit(json{{"histogram", obj}}, text);
      };
    });
  }
  {
    auto* c = grp->add_subcommand("quadrant",
                                  "first-quadrant count of m x^2 + n y^2 = N");
    auto m = std::make_shared<std::string>();
    auto n = std::make_shared<std::string>();
    auto target = std::make_shared<std::string>();
    c->add_option("--m", *m, "x^2 coefficient")->required();
    c->add_option("--n", *n, "y^2 coefficient")->required();
    c->add_option("--N", *target, "level")->required();
    c->callback([&ctx, m, n, target] {
      ctx.action = [&ctx, m, n, target] {
        auto qc = repcount::first_quadrant_count(parse_int_arg(*m, "--m"),
                                                 parse_int_arg(*n, "--n"),
                                                 parse_int_arg(*target, "--N"));
        ctx.emit(json{{"m", *m},
                      {"n", *n},
                      {"N", *target},
                      {"count", jnum(qc.count)},
                      {"solutions", jsolutions(qc.solutions)}},
                 std::to_string(qc.count) + " " + solutions_text(qc.solutions));
      };
    });
  }
}

void add_witness_commands(CLI::App& app, Ctx& ctx) {
  auto* grp = app.add_subcommand("witness", "verified witness searches");
  grp->require_subcommand(1);

  {
    auto* c = grp->add_subcommand("prime", "smallest represented prime");
    auto form = std::make_shared<std::string>();
    auto avoid = std::make_shared<std::string>();
    c->add_option("--form", *form, "form a,b,c")->required();
    c->add_option("--avoid", *avoid, "comma-separated integers to stay coprime to");
    c->callback([&ctx, form, avoid] {
      ctx.action = [&ctx, form, avoid] {
        auto w = witness::find_represented_prime(
            qform::parse_form(*form), parse_int_list(*avoid, "--avoid"),
            ctx.bound);
        ctx.emit(json{{"p", jnum(w.p)},
                      {"rep", {jnum(w.rep.first), jnum(w.rep.second)}},
                      {"form", jform(w.form)}},
                 w.p.get_str() + " (" + w.rep.first.get_str() + "," +
                     w.rep.second.get_str() + ")");
      };
    });
  }
  {
    auto* c = grp->add_subcommand(
        "theorem-q", "prime power m x^2 + n y^2 with k positive solutions");
    auto m = std::make_shared<std::string>();
    auto n = std::make_shared<std::string>();
    auto k = std::make_shared<long>(1);
    c->add_option("--m", *m, "x^2 coefficient")->required();
    c->add_option("--n", *n, "y^2 coefficient")->required();
    c->add_option("--k", *k, "target positive-solution count")->required();
    c->callback([&ctx, m, n, k] {
      ctx.action = [&ctx, m, n, k] {
        auto w = witness::theorem_q_witness(parse_int_arg(*m, "--m"),
                                            parse_int_arg(*n, "--n"), *k,
                                            ctx.bound);
        ctx.emit(json{{"p", jnum(w.prime_p)},
                      {"N", jnum(w.value)},
                      {"k", jnum(w.target_count)},
                      {"solutions", jsolutions(w.solutions)},
                      {"search_steps", jnum(w.search_steps)}},
                 "p=" + w.prime_p.get_str() + " N=" + w.value.get_str() + " " +
                     solutions_text(w.solutions));
      };
    });
  }
  {
    auto* c = grp->add_subcommand("surjectivity",
                                  "n with proper representation count k");
    auto form = std::make_shared<std::string>();
    auto k = std::make_shared<long>(1);
    c->add_option("--form", *form, "form a,b,c")->required();
    c->add_option("--k", *k, "target proper count")->required();
    c->callback([&ctx, form, k] {
      ctx.action = [&ctx, form, k] {
        auto w = witness::surjectivity_witness(qform::parse_form(*form), *k,
                                               ctx.bound);
        ctx.emit(json{{"n", jnum(w.value)},
                      {"k", jnum(w.target_count)},
                      {"n0", jnum(w.prime_p)},
                      {"q", jnum(w.prime_q)},
                      {"solutions", jsolutions(w.solutions)},
                      {"search_steps", jnum(w.search_steps)}},
                 "n=" + w.value.get_str() + " " + solutions_text(w.solutions));
      };
    });
  }
}

json jclassification(const spectra::MultiplicitySet& m) {
  json j{{"set", spectra::tag_str(m.tag)}, {"case", m.provenance}};
  if (m.delta) j["delta"] = jnum(*m.delta);
  return j;
}

void add_rect_commands(CLI::App& app, Ctx& ctx) {
  auto* grp = app.add_subcommand("rect", "rectangle spectrum");
  grp->require_subcommand(1);

  {
    auto* c = grp->add_subcommand("classify", "multiplicity set of a rectangle");
    auto ratio = std::make_shared<std::string>();
    c->add_option("--ratio-sq", *ratio, "(a/b)^2 as an exact value")->required();
    c->callback([&ctx, ratio] {
      ctx.action = [&ctx, ratio] {
        auto spec = spectra::make_rectangle(Exact::parse(*ratio));
        auto m = spectra::rect_classify(spec);
        ctx.emit(jclassification(m), spectra::tag_str(m.tag));
      };
    });
  }
  {
    auto* c = grp->add_subcommand("mult", "multiplicity of lambda_{m0,n0}");
    auto ratio = std::make_shared<std::string>();
    auto m0 = std::make_shared<std::string>();
    auto n0 = std::make_shared<std::string>();
    c->add_option("--ratio-sq", *ratio, "(a/b)^2, rational")->required();
    c->add_option("--m0", *m0, "first index")->required();
    c->add_option("--n0", *n0, "second index")->required();
    c->callback([&ctx, ratio, m0, n0] {
      ctx.action = [&ctx, ratio, m0, n0] {
        auto spec = spectra::make_rectangle(Exact::parse(*ratio));
        Int mi = parse_int_arg(*m0, "--m0"), ni = parse_int_arg(*n0, "--n0");
        long mult = spectra::rect_multiplicity(spec, mi, ni);
        json j{{"multiplicity", jnum(mult)}};
        if (spec.reduced) {
          const auto& [p_r, q_r] = *spec.reduced;
          j["N"] = jnum(p_r * mi * mi + q_r * ni * ni);
        }
        ctx.emit(j, std::to_string(mult));
      };
    });
  }
  {
    auto* c = grp->add_subcommand("witness", "eigenvalue of multiplicity k");
    auto ratio = std::make_shared<std::string>();
    auto k = std::make_shared<long>(1);
    c->add_option("--ratio-sq", *ratio, "(a/b)^2, rational")->required();
    c->add_option("--k", *k, "target multiplicity")->required();
    c->callback([&ctx, ratio, k] {
      ctx.action = [&ctx, ratio, k] {
        auto spec = spectra::make_rectangle(Exact::parse(*ratio));
        auto rw = spectra::rect_witness(spec, *k, ctx.bound);
        json j{{"N", jnum(rw.w.value)},
               {"k", jnum(rw.w.target_count)},
               {"scale_den", jnum(rw.scale_den)},
               {"eigenvalue",
                rw.w.value.get_str() + "*pi^2/(b^2*" + rw.scale_den.get_str() + ")"},
               {"solutions", jsolutions(rw.w.solutions)},
               {"search_steps", jnum(rw.w.search_steps)}};
        if (rw.w.prime_p != 0) j["p"] = jnum(rw.w.prime_p);
        ctx.emit(j, "N=" + rw.w.value.get_str() + " " +
                        solutions_text(rw.w.solutions));
      };
    });
  }
}

void add_torus_commands(CLI::App& app, Ctx& ctx) {
  auto* grp = app.add_subcommand("torus", "flat torus spectrum");
  grp->require_subcommand(1);

  auto make_spec = [](const std::string& rcos, const std::string& rsq) {
    return spectra::make_torus(Exact::parse(rcos), Exact::parse(rsq));
  };

  {
    auto* c = grp->add_subcommand("form", "rationalized integer form");
    auto rcos = std::make_shared<std::string>();
    auto rsq = std::make_shared<std::string>();
    c->add_option("--rcos", *rcos, "r cos(theta), rational")->required();
    c->add_option("--rsq", *rsq, "r^2, rational")->required();
    c->callback([&ctx, rcos, rsq, make_spec] {
      ctx.action = [&ctx, rcos, rsq, make_spec] {
        auto tf = spectra::torus_form(make_spec(*rcos, *rsq));
        const auto& fd = tf.disc.fundamental_or_throw();
        json j{{"alpha", jnum(tf.alpha)},
               {"beta", jnum(tf.beta)},
               {"gamma", jnum(tf.gamma)},
               {"delta", jnum(tf.delta)},
               {"tau", jnum(tf.tau)},
               {"form", jform(tf.form)},
               {"discriminant",
                {{"delta", jnum(tf.disc.delta)},
                 {"delta0", jnum(fd.delta0)},
                 {"conductor", jnum(fd.conductor)}}}};
        ctx.emit(j, qform::form_str(tf.form) + " delta=" +
                        tf.disc.delta.get_str());
      };
    });
  }
  {
    auto* c = grp->add_subcommand("classify", "multiplicity set of a torus");
    auto rcos = std::make_shared<std::string>();
    auto rsq = std::make_shared<std::string>();
    c->add_option("--rcos", *rcos, "r cos(theta), exact value")->required();
    c->add_option("--rsq", *rsq, "r^2, exact value")->required();
    c->callback([&ctx, rcos, rsq, make_spec] {
      ctx.action = [&ctx, rcos, rsq, make_spec] {
        auto m = spectra::torus_classify(make_spec(*rcos, *rsq));
        ctx.emit(jclassification(m), spectra::tag_str(m.tag));
      };
    });
  }
  {
    auto* c = grp->add_subcommand("mult", "multiplicity at a lattice generator");
    auto rcos = std::make_shared<std::string>();
    auto rsq = std::make_shared<std::string>();
    auto x0 = std::make_shared<std::string>();
    auto y0 = std::make_shared<std::string>();
    c->add_option("--rcos", *rcos, "r cos(theta), exact value")->required();
    c->add_option("--rsq", *rsq, "r^2, exact value")->required();
    c->add_option("--x0", *x0, "generator x")->required();
    c->add_option("--y0", *y0, "generator y")->required();
    c->callback([&ctx, rcos, rsq, x0, y0, make_spec] {
      ctx.action = [&ctx, rcos, rsq, x0, y0, make_spec] {
        auto spec = make_spec(*rcos, *rsq);
        Int x = parse_int_arg(*x0, "--x0"), y = parse_int_arg(*y0, "--y0");
        long mult = spectra::torus_multiplicity(spec, x, y, ctx.box);
        Exact level = repcount::eval_quadratic(Exact(-2) * spec.rcos, spec.rsq,
                                               x, y);
        ctx.emit(json{{"multiplicity", jnum(mult)}, {"level", level.str()}},
                 std::to_string(mult));
      };
    });
  }
  {
    auto* c = grp->add_subcommand("sample", "observed multiplicity set");
    auto rcos = std::make_shared<std::string>();
    auto rsq = std::make_shared<std::string>();
    auto nmax = std::make_shared<std::string>("200");
    c->add_option("--rcos", *rcos, "r cos(theta), exact value")->required();
    c->add_option("--rsq", *rsq, "r^2, exact value")->required();
    c->add_option("--nmax", *nmax,
                  "levels 1..nmax on the rational branch (irrational uses --box)");
    c->callback([&ctx, rcos, rsq, nmax, make_spec] {
      ctx.action = [&ctx, rcos, rsq, nmax, make_spec] {
        auto spec = make_spec(*rcos, *rsq);
        bool rational = spec.rcos.is_rational() && spec.rsq.is_rational();
        Int arg = rational ? parse_int_arg(*nmax, "--nmax") : Int(ctx.box);
        auto sample = spectra::multiplicity_set_sample(spec, arg);
        json arr = json::array();
        std::string text;
        for (long v : sample) {
          arr.push_back(jnum(v));
          if (!text.empty()) text += " ";
          text += std::to_string(v);
        }
        ctx.emit(json{{"set", arr},
                      {rational ? "nmax" : "box", jnum(arg)}},
                 "{" + text + "}");
      };
    });
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact multiplicity sets of Laplace eigenvalues on rectangles "
               "and flat tori"};
  app.require_subcommand(1);
  Ctx ctx;
  ctx.out = &out;
  std::string bound_str = "1000000";
  app.add_flag("--json", ctx.json_mode, "emit one JSON document on stdout");
  app.add_option("--bound", bound_str, "cap for prime/witness searches");
  app.add_option("--box", ctx.box, "lattice box for irrational scans");

  add_qform_commands(app, ctx);
  add_count_commands(app, ctx);
  add_witness_commands(app, ctx);
  add_rect_commands(app, ctx);
  add_torus_commands(app, ctx);

  // Global flags remain usable after any subcommand.
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (auto* sub : a->get_subcommands([](CLI::App*) { return true; })) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    if (ctx.json_mode) out << json{{"error", e.what()}}.dump() << "\n";
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    ctx.bound = parse_int_arg(bound_str, "--bound");
    if (ctx.action) ctx.action();
    return 0;
  } catch (const search_exhausted& e) {
    if (ctx.json_mode) out << json{{"error", e.what()}}.dump() << "\n";
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    if (ctx.json_mode) out << json{{"error", e.what()}}.dump() << "\n";
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace lapmult::cli
