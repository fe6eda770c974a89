#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wreath/analysis.hpp"
#include "wreath/builders.hpp"
#include "wreath/enumeration.hpp"
#include "wreath/error.hpp"
#include "wreath/oracle.hpp"
#include "wreath/serialize.hpp"

namespace wreath::cli {

using ojson = nlohmann::ordered_json;

namespace {

std::size_t env_cap() {
  char const* raw = std::getenv("WREATH_COSET_CAP");
  if (raw == nullptr || *raw == '\0') {
    return kDefaultCosetCap;
  }
  std::string_view  text(raw);
  std::size_t       value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw InputError("WREATH_COSET_CAP must be a positive integer");
  }
  return value;
}

void emit(std::ostream& out, std::string const& text,
          std::string const& path) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) {
    throw InputError("cannot write " + path);
  }
  file << text;
}

std::string render(Presentation const& p, std::optional<WreathMeta> const& meta,
                   Format format) {
  switch (format) {
    case Format::gap:
      return to_gap(p);
    case Format::text:
      return to_text(p);
    case Format::json:
      break;
  }
  return to_json(p, meta);
}

std::string join_labels(std::vector<Presentation> const& parts) {
  std::string out;
  for (auto const& p : parts) {
    if (!p.label) {
      return {};
    }
    out += (out.empty() ? "" : " wr ") + *p.label;
  }
  return out;
}

ojson order_json(OrderResult const& r) {
  ojson j;
  if (r.order) {
    j["order"] = *r.order;
  } else {
    j["order"] = nullptr;
  }
  j["cap"]     = r.cap;
  j["defined"] = r.defined;
  j["deleted"] = r.deleted;
  return j;
}

struct PresentOptions {
  std::string              left, right, output, label;
  std::vector<std::string> files;
  std::uint64_t            right_order = 0;
  std::uint64_t            n = 0, m = 0, p = 0;
};

int present_wreath(PresentOptions const& o, RunConfig const& cfg,
                   std::ostream& out) {
  PresentationFile const h = read_presentation_file(o.left);
  PresentationFile const g = read_presentation_file(o.right);
  Factor const top = factor_from_presentation(g.presentation, cfg.coset_cap);
  if (o.right_order != 0 && top.group.order() != o.right_order) {
    throw InputError(o.right + ": presentation defines a group of order "
                     + std::to_string(top.group.order()) + ", not "
                     + std::to_string(o.right_order));
  }
  WreathResult r = wreath_presentation(h.presentation, g.presentation,
                                       top.group, top.images, cfg.coset_cap);
  r.presentation.label = o.label.empty()
                             ? join_labels({h.presentation, g.presentation})
                             : o.label;
  if (r.presentation.label->empty()) {
    r.presentation.label.reset();
  }
  emit(out, render(r.presentation, r.meta, cfg.format), o.output);
  return kSuccess;
}

int present_multi(PresentOptions const& o, RunConfig const& cfg,
                  std::ostream& out) {
  std::vector<Factor>       parts;
  std::vector<Presentation> pres;
  for (auto const& path : o.files) {
    PresentationFile f = read_presentation_file(path);
    pres.push_back(f.presentation);
    parts.push_back(factor_from_presentation(f.presentation, cfg.coset_cap));
  }
  WreathResult r       = multi_wreath_presentation(parts, cfg.coset_cap);
  r.presentation.label = o.label.empty() ? join_labels(pres) : o.label;
  if (r.presentation.label->empty()) {
    r.presentation.label.reset();
  }
  emit(out, render(r.presentation, r.meta, cfg.format), o.output);
  return kSuccess;
}

int present_cyclic(PresentOptions const& o, RunConfig const& cfg,
                   std::ostream& out) {
  Presentation p = cyclic_wreath_presentation(o.n, o.m);
  Factor const base = cyclic_factor("y", o.n);
  Factor const top  = cyclic_factor("x", o.m);
  WreathResult r    = wreath_presentation(base.presentation, top.presentation,
                                          top.group, top.images, cfg.coset_cap);
  if (r.presentation != p) {
    throw std::logic_error("cyclic builder disagrees with the wreath builder");
  }
  p.label = o.label.empty()
                ? "C" + std::to_string(o.n) + " wr C" + std::to_string(o.m)
                : o.label;
  emit(out, render(p, r.meta, cfg.format), o.output);
  return kSuccess;
}

int present_sylow(PresentOptions const& o, RunConfig const& cfg,
                  std::ostream& out) {
  Presentation p = sylow_presentation(o.p, o.n);
  std::vector<Factor> parts;
  for (std::uint64_t i = 1; i <= o.n; ++i) {
    parts.push_back(cyclic_factor("x" + std::to_string(i), o.p));
  }
  WreathResult r = multi_wreath_presentation(parts, cfg.coset_cap);
  if (r.presentation != p) {
    throw std::logic_error("Sylow builder disagrees with the wreath builder");
  }
  std::uint64_t degree = 1;
  for (std::uint64_t i = 0; i < o.n; ++i) {
    degree *= o.p;
  }
  p.label = o.label.empty() ? "Syl" + std::to_string(o.p) + "(S"
                                  + std::to_string(degree) + ")"
                            : o.label;
  emit(out, render(p, r.meta, cfg.format), o.output);
  return kSuccess;
}

struct VerifyOptions {
  std::string   file;
  std::uint64_t expect          = 0;
  bool          expect_infinite = false;
};

int verify_order(VerifyOptions const& o, RunConfig const& cfg,
                 std::ostream& out, std::ostream& err) {
  PresentationFile const f = read_presentation_file(o.file);
  CosetTable const table = todd_coxeter(f.presentation, {}, cfg.coset_cap);
  OrderResult      r;
  r.cap     = cfg.coset_cap;
  r.defined = table.defined_count();
  r.deleted = table.deleted_count();
  if (table.closed()) {
    r.order = table.rows();
  }
  ojson report      = order_json(r);
  report["command"] = "verify order";
  if (o.expect_infinite) {
    report["expected"] = "infinite";
  } else {
    report["expected"] = o.expect;
  }

  int code = kSuccess;
  if (!table.closed()) {
    if (o.expect_infinite) {
      report["status"] = "pass";
    } else {
      report["status"] = "cap exceeded";
      err << "coset enumeration exceeded the cap of " << cfg.coset_cap
          << " cosets\n";
      code = kCapExhausted;
    }
  } else {
    auto problems           = verify_coset_table(table, f.presentation);
    report["table_checked"] = problems.empty();
    bool const ok = problems.empty() && !o.expect_infinite && r.order == o.expect;
    report["status"] = ok ? "pass" : "fail";
    code             = ok ? kSuccess : kVerifyFailed;
  }
  out << report.dump(2) << "\n";
  return code;
}

int verify_hom(VerifyOptions const& o, RunConfig const& cfg,
               std::ostream& out) {
  PresentationFile const f = read_presentation_file(o.file);
  if (!f.meta) {
    throw InputError(o.file + ": no wreath_meta; verify hom needs it");
  }
  WreathMeta const&   meta = *f.meta;
  Presentation const& p    = f.presentation;

  auto indices = [](IndexRange r) {
    std::vector<std::size_t> v;
    for (std::size_t i = r.first; i < r.end(); ++i) {
      v.push_back(i);
    }
    return v;
  };
  Presentation const ph = sub_presentation(p, meta.left_gens.first,
                                           meta.left_gens.count,
                                           indices(meta.left_relators));
  Presentation const pg = sub_presentation(p, meta.right_gens.first,
                                           meta.right_gens.count,
                                           indices(meta.right_relators));
  Factor const base = factor_from_presentation(ph, cfg.coset_cap);
  Factor const top  = factor_from_presentation(pg, cfg.coset_cap);
  ConcreteWreath const w(base.group, top.group, cfg.oracle_limit);

  ojson report;
  report["command"]    = "verify hom";
  report["base_order"] = base.group.order();
  report["top_order"]  = top.group.order();
  report["wreath_order"] = w.order();

  bool t_ok = true;
  for (auto const& t : meta.transversal) {
    std::vector<Syllable> syl = t.word.syllables();
    for (auto& s : syl) {
      if (!meta.right_gens.contains(s.gen)) {
        throw InputError("t_word uses a generator outside the top group");
      }
      s.gen -= meta.right_gens.first;
    }
    if (evaluate(top.group, top.images, Word(std::move(syl))) != t.element) {
      t_ok = false;
    }
  }
  report["t_words_ok"] = t_ok;

  auto const images = canonical_images(meta, w, base.images, top.images);
  RelatorReport const rel = check_relators(p, w, std::span(images));
  ojson failing = ojson::array();
  for (std::size_t i = 0; i < rel.holds.size(); ++i) {
    if (!rel.holds[i]) {
      failing.push_back(format_word(p.relators[i], p.generators));
    }
  }
  report["relators_checked"] = rel.holds.size();
  report["relators_failing"] = failing;
  bool const generates       = check_generates(w, std::span(images));
  report["generates"]        = generates;

  OrderResult const order = group_order(p, cfg.coset_cap);
  report["presentation"]  = order_json(order);
  if (!order.known()) {
    report["status"] = "cap exceeded";
    out << report.dump(2) << "\n";
    return kCapExhausted;
  }
  bool const ok = t_ok && rel.all_pass() && generates && *order.order == w.order();
  report["status"] = ok ? "pass" : "fail";
  out << report.dump(2) << "\n";
  return ok ? kSuccess : kVerifyFailed;
}

struct CheckOptions {
  std::string   file;
  std::uint64_t expect = 0;
  std::uint64_t q      = 0;
};

int check_conormal(CheckOptions const& o, RunConfig const& cfg,
                   std::ostream& out) {
  PresentationFile const  f = read_presentation_file(o.file);
  Presentation const&     p = f.presentation;
  ConormalityReport const c = conormality_gcd(p);
  ojson gens                = ojson::array();
  bool  agree               = true;
  for (std::size_t i = 0; i < p.generator_count(); ++i) {
    auto const d_enum = conormality_enum(p, i, cfg.coset_cap);
    ojson      g;
    g["generator"] = p.generators[i];
    g["d"]         = c.quotient_orders[i];
    if (d_enum) {
      g["d_enum"] = *d_enum;
      agree       = agree && *d_enum == c.quotient_orders[i];
    } else {
      g["d_enum"] = "cap";
      agree       = agree && c.quotient_orders[i] == 0;
    }
    g["conormal"] = c.conormal(i);
    gens.push_back(std::move(g));
  }
  ojson report;
  report["command"]      = "check conormal";
  report["generators"]   = std::move(gens);
  report["methods_agree"] = agree;
  report["all_conormal"] = c.all_conormal();
  out << report.dump(2) << "\n";
  return agree && c.all_conormal() ? kSuccess : kVerifyFailed;
}

int check_minimal(CheckOptions const& o, RunConfig const& cfg,
                  std::ostream& out) {
  PresentationFile const f = read_presentation_file(o.file);
  Presentation const&    p = f.presentation;
  auto const verdicts = minimality_drop_test(p, o.expect, cfg.coset_cap);
  ojson      report   = ojson::array();
  bool       all_needed = true;
  for (auto const& v : verdicts) {
    ojson j;
    j["relator"] = format_word(p.relators[v.relator], p.generators);
    j["verdict"] = to_string(v.kind);
    if (v.order) {
      j["order"] = *v.order;
    }
    all_needed = all_needed && v.kind != RelatorVerdict::Kind::redundant;
    report.push_back(std::move(j));
  }
  out << report.dump(2) << "\n";
  return all_needed ? kSuccess : kVerifyFailed;
}

int check_frattini(CheckOptions const& o, std::ostream& out) {
  PresentationFile const f = read_presentation_file(o.file);
  bool const             ok = frattini_check(f.presentation, o.q);
  ojson                  report;
  report["command"] = "check frattini";
  report["q"]       = o.q;
  report["result"]  = ok;
  out << report.dump(2) << "\n";
  return ok ? kSuccess : kVerifyFailed;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  try {
    cfg.coset_cap = env_cap();
  } catch (InputError const& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  CLI::App app{"Finite presentations of wreath products and their checks",
               "wreathctl"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<std::size_t> cap;
  std::string                format = "json";
  app.add_option("--cap", cap, "Coset cap (default $WREATH_COSET_CAP or 1e6)")
      ->check(CLI::PositiveNumber);
  app.add_option("--oracle-limit", cfg.oracle_limit,
                 "Largest concrete wreath product built for checks")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format for presentations")
      ->check(CLI::IsMember({"json", "gap", "text"}));

  PresentOptions po;
  auto* present = app.add_subcommand("present", "Build a presentation");
  present->require_subcommand(1);
  present->add_option("-o,--output", po.output, "Write to a file");
  present->add_option("--label", po.label, "Label stored in the output");

  auto* p_wreath = present->add_subcommand("wreath", "H wr G from two files");
  p_wreath->add_option("--left", po.left, "Presentation of H")->required();
  p_wreath->add_option("--right", po.right, "Presentation of G")->required();
  p_wreath->add_option("--right-order", po.right_order,
                       "Claimed order of G; checked against enumeration");

  auto* p_multi = present->add_subcommand("multi", "G_1 wr G_2 wr .. wr G_m");
  p_multi->add_option("files", po.files, "Factor presentations")
      ->required()
      ->expected(1, -1);

  auto* p_cyclic = present->add_subcommand("cyclic", "C_n wr C_m");
  p_cyclic->add_option("-n", po.n, "Base order")->required();
  p_cyclic->add_option("-m", po.m, "Top order")->required();

  auto* p_sylow = present->add_subcommand("sylow", "Sylow p-subgroup of S_{p^n}");
  p_sylow->add_option("-p", po.p, "Prime")->required();
  p_sylow->add_option("-n", po.n, "Depth")->required();

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Verify a presentation");
  verify->require_subcommand(1);
  auto* v_order = verify->add_subcommand("order", "Check the group order");
  v_order->add_option("file", vo.file)->required();
  auto* expect_opt = v_order->add_option("--expect", vo.expect, "Expected order");
  auto* inf_flag = v_order->add_flag("--expect-infinite", vo.expect_infinite,
                                     "Pass when the enumeration hits the cap");
  expect_opt->excludes(inf_flag);
  auto* v_hom = verify->add_subcommand(
      "hom", "Check a wreath presentation against the concrete wreath product");
  v_hom->add_option("file", vo.file)->required();

  CheckOptions co;
  auto* check = app.add_subcommand("check", "Conormality and minimality");
  check->require_subcommand(1);
  auto* c_conormal = check->add_subcommand("conormal", "Conormality report");
  c_conormal->add_option("file", co.file)->required();
  auto* c_minimal = check->add_subcommand("minimal", "Relator-drop test");
  c_minimal->add_option("file", co.file)->required();
  c_minimal->add_option("--expect", co.expect, "Order of the group")->required();
  auto* c_frattini = check->add_subcommand("frattini", "Frattini quotient rank");
  c_frattini->add_option("file", co.file)->required();
  c_frattini->add_option("-q", co.q, "Prime")->required();

  for (auto* sub : {present, p_wreath, p_multi, p_cyclic, p_sylow, verify,
                    v_order, v_hom, check, c_conormal, c_minimal, c_frattini}) {
    sub->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kSuccess;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  if (cap) {
    cfg.coset_cap = *cap;
  }
  cfg.format = format == "gap" ? Format::gap
               : format == "text" ? Format::text
                                  : Format::json;

  try {
    if (p_wreath->parsed()) {
      return present_wreath(po, cfg, out);
    }
    if (p_multi->parsed()) {
      return present_multi(po, cfg, out);
    }
    if (p_cyclic->parsed()) {
      return present_cyclic(po, cfg, out);
    }
    if (p_sylow->parsed()) {
      return present_sylow(po, cfg, out);
    }
    if (v_order->parsed()) {
      if (!vo.expect_infinite && expect_opt->count() == 0) {
        throw InputError("verify order needs --expect N or --expect-infinite");
      }
      return verify_order(vo, cfg, out, err);
    }
    if (v_hom->parsed()) {
      return verify_hom(vo, cfg, out);
    }
    if (c_conormal->parsed()) {
      return check_conormal(co, cfg, out);
    }
    if (c_minimal->parsed()) {
      return check_minimal(co, cfg, out);
    }
    if (c_frattini->parsed()) {
      return check_frattini(co, out);
    }
  } catch (CapExceededError const& e) {
    err << "error: " << e.what() << "\n";
    return kCapExhausted;
  } catch (InputError const& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (LimitError const& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  err << "error: no command\n";
  return kInputError;
}

}  // namespace wreath::cli
