#include <fstream>
#include <functional>
#include <map>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "serialize.hpp"
#include "twisted_h1/bundles.hpp"
#include "twisted_h1/error.hpp"
#include "twisted_h1/oracle.hpp"
#include "twisted_h1/reference_tables.hpp"

using namespace twisted_h1;
using twisted_h1::cli::Json;

namespace {

constexpr int kExitArgument = 2;
constexpr int kExitDomain = 3;
constexpr int kExitMismatch = 4;
constexpr std::uint64_t kMaxListedLabels = 4096;

struct Options {
  std::string type;
  int rank = 0;
  std::string isogeny = "sc";
  int tau_order = 1;
  int m = 0;
  std::string method = "auto";
  std::string format = "text";
  bool verify = false;
  bool dump_datum = false;
  bool classes = false;
  std::string point;
  std::string theta;
  std::string covering;
  int genus = 0;
  std::string indices;
};

/// Everything a command produces, rendered afterwards in the chosen format.
struct Output {
  Json doc;
  std::vector<std::string> text;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  int exit_code = 0;
};

SimpleType selected_type(const Options& o) {
  if (o.type.empty()) fail(ErrorKind::invalid_input, "--type is required");
  SimpleType t{parse_family(o.type.substr(0, 1)), o.rank};
  if (o.type.size() > 1) {
    try {
      t.rank = std::stoi(o.type.substr(1));
    } catch (const std::exception&) {
      fail(ErrorKind::invalid_input, "cannot read a rank from --type '" + o.type + "'");
    }
    if (o.rank != 0 && o.rank != t.rank)
      fail(ErrorKind::invalid_input, "--type " + o.type + " conflicts with --rank " + std::to_string(o.rank));
  }
  if (t.rank == 0) fail(ErrorKind::invalid_input, "--rank is required");
  t.validate();
  return t;
}

DiagramAutomorphism selected_automorphism(const Options& o) {
  return diagram_automorphism(RootDatum(selected_type(o), parse_isogeny(o.isogeny)), o.tau_order);
}

int required_m(const Options& o) {
  if (o.m < 1) fail(ErrorKind::invalid_input, "--m must be a positive integer");
  return o.m;
}

std::string group_name(const DiagramAutomorphism& da) {
  return da.base.name() + ", tau of order " + std::to_string(da.order);
}

Json header(const std::string& command, const DiagramAutomorphism& da) {
  Json doc;
  doc["command"] = command;
  doc["type"] = std::string(1, to_char(da.base.type().family));
  doc["rank"] = da.base.rank();
  doc["isogeny"] = std::string(to_string(da.base.isogeny()));
  doc["tau_order"] = da.order;
  return doc;
}

void attach_datum(Output& out, const Options& o, const DiagramAutomorphism& da) {
  if (!o.dump_datum) return;
  const FoldedDatum fd = folded_datum(da);
  out.doc["datum"] = cli::datum_to_json(da.base);
  out.doc["folded"] = cli::folded_to_json(fd);
  out.text.insert(out.text.begin(), {"datum: " + out.doc["datum"].dump(), "folded: " + out.doc["folded"].dump()});
}

std::string join_strings(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string one_based(const std::vector<int>& word) {
  std::vector<std::string> parts;
  for (int w : word) parts.push_back(std::to_string(w));
  return "[" + join_strings(parts, ",") + "]";
}

Output cmd_h1(const Options& o) {
  const auto da = selected_automorphism(o);
  const int m = required_m(o);
  const auto set = h1_group(da, m, parse_method(o.method));
  const FoldedDatum fd = folded_datum(da);

  Output out;
  out.doc = header("h1", da);
  out.doc["m"] = m;
  out.doc["method"] = std::string(to_string(set.provenance));
  out.doc["cardinality"] = set.cardinality();
  if (set.cross_check)
    out.doc["cross_check"] = {{"method", std::string(to_string(set.cross_check->first))},
                              {"cardinality", set.cross_check->second}};
  out.doc["classes"] = Json::array();
  out.csv_header = {"index", "m", "lambda", "lambda_ambient", "coweight_ambient", "orbit_size", "alcove_point", "kac"};
  std::string summary = "H^1 for " + group_name(da) + ", m = " + std::to_string(m) + ": " +
                        std::to_string(set.cardinality()) + " classes (" + std::string(to_string(set.provenance)) +
                        " method";
  if (set.cross_check) summary += "; " + std::string(to_string(set.cross_check->first)) + " method agrees";
  out.text.push_back(summary + ")");
  for (std::size_t i = 0; i < set.classes.size(); ++i) {
    const auto& c = set.classes[i];
    out.doc["classes"].push_back(cli::class_to_json(c, fd, i));
    const std::string alcove = c.alcove_point ? cli::join(*c.alcove_point) : "";
    const std::string kac = c.kac ? cli::join(*c.kac) : "";
    out.csv_rows.push_back({std::to_string(i), std::to_string(c.m), cli::join(c.lambda), cli::join(c.lambda_ambient),
                            cli::join(to_ambient(fd, c.coweight())), c.orbit_size ? std::to_string(c.orbit_size) : "",
                            alcove, kac});
    std::string line = "  [" + std::to_string(i) + "] zeta_" + std::to_string(c.m) + "^" + cli::join(c.lambda_ambient) +
                       "  coweight " + cli::join(to_ambient(fd, c.coweight()));
    if (c.orbit_size) line += "  orbit size " + std::to_string(c.orbit_size);
    if (c.kac) line += "  kac " + kac;
    out.text.push_back(line);
  }
  out.doc["note"] = "valid when the characteristic of the base field does not divide m";
  if (o.verify) {
    const std::size_t oracle = brute_force_h1_group(da, m);
    const bool agrees = oracle == set.cardinality();
    out.doc["verify"] = {{"oracle_cardinality", oracle}, {"agrees", agrees}};
    out.text.push_back("verify: brute force finds " + std::to_string(oracle) + " classes" + (agrees ? "" : " (MISMATCH)"));
    if (!agrees) out.exit_code = kExitMismatch;
  }
  attach_datum(out, o, da);
  return out;
}

Output cmd_h1_torus(const Options& o) {
  const auto da = selected_automorphism(o);
  const int m = required_m(o);
  const auto group = h1_torus(da, m);

  Output out;
  out.doc = header("h1-torus", da);
  out.doc["m"] = m;
  out.doc["group"] = group.to_string();
  out.doc["invariant_factors"] = group.invariant_factors();
  out.doc["cardinality"] = group.cardinality();
  out.doc["generators"] = Json::array();
  out.csv_header = {"factor", "generator_ambient"};
  out.text.push_back("H^1 of the torus for " + group_name(da) + ", m = " + std::to_string(m) + ": " + group.to_string() +
                     " (order " + std::to_string(group.cardinality()) + ")");
  for (std::size_t i = 0; i < group.lift_basis().size(); ++i) {
    const IntVec& ambient = group.lift_basis()[i];
    out.doc["generators"].push_back({{"order", group.invariant_factors()[i]}, {"lambda_ambient", ambient}});
    out.csv_rows.push_back({std::to_string(group.invariant_factors()[i]), cli::join(ambient)});
    out.text.push_back("  Z/" + std::to_string(group.invariant_factors()[i]) + " generated by zeta_" + std::to_string(m) +
                       "^" + cli::join(ambient));
  }
  if (o.verify) {
    const auto oracle = brute_force_h1_torus(da, m);
    const bool agrees = oracle.classes.size() == group.cardinality();
    out.doc["verify"] = {{"oracle_cardinality", oracle.classes.size()},
                         {"cocycles", oracle.cocycles},
                         {"coboundaries", oracle.coboundaries},
                         {"agrees", agrees}};
    out.text.push_back("verify: brute force finds " + std::to_string(oracle.classes.size()) + " classes" +
                       (agrees ? "" : " (MISMATCH)"));
    if (!agrees) out.exit_code = kExitMismatch;
  }
  attach_datum(out, o, da);
  return out;
}

Output cmd_alcove(const Options& o) {
  const auto da = selected_automorphism(o);
  const int m = required_m(o);
  const FoldedDatum fd = folded_datum(da);
  const auto walls = fundamental_alcove(fd);
  const auto points = enumerate_alcove_points(fd, m);

  Output out;
  out.doc = header("alcove", da);
  out.doc["m"] = m;
  out.doc["inequalities"] = Json::array();
  out.text.push_back("alcove for " + group_name(da) + " (invariant coordinates):");
  for (const auto& w : walls) {
    out.doc["inequalities"].push_back({{"node", w.node}, {"constant", w.constant}, {"linear", w.linear}});
    out.text.push_back("  node " + std::to_string(w.node) + ": " + std::to_string(w.constant) + " + " +
                       cli::join(w.linear) + ".x >= 0");
  }
  out.doc["count"] = points.size();
  out.doc["points"] = Json::array();
  out.csv_header = {"index", "point", "point_ambient"};
  out.text.push_back(std::to_string(points.size()) + " points with denominators dividing m/r = " +
                     std::to_string(m / da.order) + ":");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const RatVec ambient = to_ambient(fd, points[i]);
    Json p{{"index", i}, {"point", cli::rational_vector(points[i])}, {"point_ambient", cli::rational_vector(ambient)}};
    if (fd.isogeny == Isogeny::adjoint) p["kac"] = alcove_to_kac(fd, m, points[i]);
    out.doc["points"].push_back(p);
    out.csv_rows.push_back({std::to_string(i), cli::join(points[i]), cli::join(ambient)});
    out.text.push_back("  [" + std::to_string(i) + "] " + cli::join(points[i]) + "  ambient " + cli::join(ambient));
  }
  attach_datum(out, o, da);
  return out;
}

Output cmd_kac(const Options& o) {
  const auto da = selected_automorphism(o);
  const int m = required_m(o);
  const FoldedDatum fd = folded_datum(da);
  const auto tuples = o.classes ? kac_classes(fd, m) : enumerate_kac_coordinates(fd, m);

  Output out;
  out.doc = header("kac", da);
  out.doc["m"] = m;
  out.doc["kac_labels"] = fd.kac_labels;
  out.doc["classes"] = o.classes;
  out.doc["count"] = tuples.size();
  out.doc["tuples"] = tuples;
  out.csv_header = {"index", "kac"};
  out.text.push_back(std::string(o.classes ? "Kac classes" : "Kac coordinates") + " for " + group_name(da) +
                     ", m = " + std::to_string(m) + ", labels " + cli::join(fd.kac_labels) + ": " +
                     std::to_string(tuples.size()));
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    out.csv_rows.push_back({std::to_string(i), cli::join(tuples[i])});
    out.text.push_back("  [" + std::to_string(i) + "] " + cli::join(tuples[i]));
  }
  attach_datum(out, o, da);
  return out;
}

Output cmd_classify(const Options& o) {
  const auto da = selected_automorphism(o);
  const int m = required_m(o);
  const auto descs = classify_automorphisms(da, m);

  Output out;
  out.doc = header("classify-autos", da);
  out.doc["m"] = m;
  out.doc["count"] = descs.size();
  out.doc["descriptors"] = Json::array();
  out.csv_header = {"index", "kac", "lambda_ambient", "sigma"};
  out.text.push_back("automorphisms of order " + std::to_string(m) + " in the outer class of tau (order " +
                     std::to_string(da.order) + ") for " + da.base.type().to_string() + ": " +
                     std::to_string(descs.size()) + " classes");
  for (std::size_t i = 0; i < descs.size(); ++i) {
    const auto& d = descs[i];
    out.doc["descriptors"].push_back(cli::descriptor_to_json(d));
    const std::string kac = d.kac ? cli::join(*d.kac) : "";
    out.csv_rows.push_back({std::to_string(i), kac, cli::join(d.lambda_ambient), d.sigma()});
    out.text.push_back("  [" + std::to_string(i) + "] kac " + kac + "  sigma = " + d.sigma());
  }
  attach_datum(out, o, da);
  return out;
}

Output cmd_reduce(const Options& o) {
  const auto da = selected_automorphism(o);
  const FoldedDatum fd = folded_datum(da);
  const RatVec x = cli::parse_rational_list(o.point);
  if (x.size() != fd.rank())
    fail(ErrorKind::invalid_input, "--point has " + std::to_string(x.size()) + " coordinates, expected " +
                                       std::to_string(fd.rank()) + " (invariant coordinates)");
  const auto red = reduce_to_alcove(fd, x);
  const bool witness_ok = add(red.linear.apply(x), to_rational(red.translation)) == red.point;

  Output out;
  out.doc = header("reduce", da);
  out.doc["input"] = cli::rational_vector(x);
  out.doc["point"] = cli::rational_vector(red.point);
  out.doc["point_ambient"] = cli::rational_vector(to_ambient(fd, red.point));
  out.doc["linear"] = cli::int_matrix(red.linear);
  out.doc["translation"] = red.translation;
  out.doc["word"] = red.word;
  out.doc["witness_checked"] = witness_ok;
  out.csv_header = {"input", "point", "translation", "word"};
  out.csv_rows.push_back({cli::join(x), cli::join(red.point), cli::join(red.translation), one_based(red.word)});
  out.text.push_back("reduce " + cli::join(x) + " for " + group_name(da) + " -> " + cli::join(red.point));
  out.text.push_back("  witness: point = w(x) + " + cli::join(red.translation) + ", w = " +
                     cli::int_matrix(red.linear).dump() + (witness_ok ? " (checked)" : " (FAILED)"));
  out.text.push_back("  affine reflections applied: " + one_based(red.word));
  if (!witness_ok) fail(ErrorKind::internal, "reduction witness does not reproduce the reduced point");
  attach_datum(out, o, da);
  return out;
}

Output cmd_parahoric(const Options& o) {
  const auto da = selected_automorphism(o);
  const FoldedDatum fd = folded_datum(da);
  const RatVec theta = cli::parse_rational_list(o.theta);
  const auto p = parahoric_descriptor(fd, theta);

  Output out;
  out.doc = header("parahoric", da);
  out.doc["theta"] = cli::rational_vector(theta);
  out.doc["m_min"] = p.m_min;
  out.doc["lambda"] = p.lambda;
  out.doc["lambda_ambient"] = to_ambient(fd, p.lambda);
  out.doc["alcove_point"] = cli::rational_vector(p.alcove_point);
  out.doc["descriptor"] = cli::descriptor_to_json(p.descriptor);
  out.csv_header = {"m_min", "lambda_ambient", "alcove_point", "sigma"};
  out.csv_rows.push_back({std::to_string(p.m_min), cli::join(to_ambient(fd, p.lambda)), cli::join(p.alcove_point),
                          p.descriptor.sigma()});
  out.text.push_back("theta = " + cli::join(theta) + ": m = " + std::to_string(p.m_min) + ", lambda = " +
                     cli::join(to_ambient(fd, p.lambda)));
  out.text.push_back("  alcove representative " + cli::join(p.alcove_point) + ", sigma = " + p.descriptor.sigma());
  attach_datum(out, o, da);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::invalid_input, "cannot read covering file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Output cmd_components(const Options& o) {
  const CoveringData cd = parse_covering(read_file(o.covering));
  const Isogeny iso = parse_isogeny(o.isogeny);
  const std::uint64_t count = component_count(cd, iso);
  const auto sets = local_type_sets(cd, iso);

  Output out;
  out.doc["command"] = "components";
  out.doc["covering"] = Json::parse(covering_to_json(cd));
  out.doc["isogeny"] = std::string(to_string(iso));
  out.doc["local_type_counts"] = Json::array();
  for (const auto& s : sets) out.doc["local_type_counts"].push_back(s.cardinality());
  out.doc["component_count"] = count;
  out.text.push_back(cd.type.to_string() + "/" + std::string(to_string(iso)) + " over genus " + std::to_string(cd.genus) +
                     " with " + std::to_string(cd.orbits.size()) + " ramified orbits: " + std::to_string(count) +
                     " connected components");
  out.csv_header = {"index", "label"};
  const bool listed = count <= kMaxListedLabels;
  out.doc["labels_listed"] = listed;
  out.doc["labels"] = Json::array();
  if (listed) {
    std::vector<std::size_t> a(sets.size(), 0);
    for (std::uint64_t i = 0; i < count; ++i) {
      const std::string label = bundle_label(cd, sets, a);
      out.doc["labels"].push_back(label);
      out.csv_rows.push_back({std::to_string(i), label});
      out.text.push_back("  " + label);
      for (std::size_t k = a.size(); k-- > 0;) {
        if (++a[k] < sets[k].cardinality()) break;
        a[k] = 0;
      }
    }
  } else {
    out.text.push_back("  (labels not listed beyond " + std::to_string(kMaxListedLabels) + " components)");
  }
  return out;
}

std::vector<int> parse_indices(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorKind::invalid_input, "cannot read ramification index '" + item + "'");
    }
  }
  return out;
}

Output cmd_covering_exists(const Options& o) {
  const auto indices = parse_indices(o.indices);
  const auto v = covering_exists(o.genus, indices);
  Output out;
  out.doc["command"] = "covering-exists";
  out.doc["genus"] = o.genus;
  out.doc["indices"] = indices;
  out.doc["exists"] = v.exists;
  out.doc["reason"] = v.reason;
  out.doc["note"] = "characteristic zero assumed";
  out.csv_header = {"genus", "indices", "exists", "reason"};
  out.csv_rows.push_back({std::to_string(o.genus), o.indices, v.exists ? "true" : "false", v.reason});
  out.text.push_back(std::string(v.exists ? "true" : "false") + " (" + v.reason + ")");
  return out;
}

Output cmd_paper_tables(const Options&) {
  const auto checks = run_reference_checks();
  Output out;
  out.doc["command"] = "paper-tables";
  out.doc["checks"] = Json::array();
  out.csv_header = {"check", "tag", "item", "expected", "actual", "ok"};
  std::size_t failed = 0;
  for (const auto& c : checks) {
    Json rows = Json::array();
    for (const auto& r : c.rows) {
      rows.push_back({{"item", r.item}, {"expected", r.expected}, {"actual", r.actual}, {"ok", r.ok}});
      out.csv_rows.push_back({std::to_string(c.number), c.tag, r.item, r.expected, r.actual, r.ok ? "true" : "false"});
    }
    out.doc["checks"].push_back(
        {{"number", c.number}, {"tag", c.tag}, {"title", c.title}, {"passed", c.passed()}, {"rows", rows}});
    out.text.push_back(std::string(c.passed() ? "PASS" : "FAIL") + " " + std::to_string(c.number) + " " + c.tag + ": " +
                       c.title + " (" + std::to_string(c.rows.size() - c.failures()) + "/" +
                       std::to_string(c.rows.size()) + " rows match)");
    for (const auto& r : c.rows)
      if (!r.ok) out.text.push_back("    " + r.item + ": expected " + r.expected + ", got " + r.actual);
    if (!c.passed()) ++failed;
  }
  out.doc["failed_checks"] = failed;
  if (failed) out.exit_code = kExitMismatch;
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

void render(const Output& out, const std::string& format) {
  if (format == "json") {
    std::cout << out.doc.dump(2) << "\n";
  } else if (format == "csv") {
    std::vector<std::string> header;
    for (const auto& h : out.csv_header) header.push_back(csv_field(h));
    std::cout << join_strings(header, ",") << "\n";
    for (const auto& row : out.csv_rows) {
      std::vector<std::string> fields;
      for (const auto& f : row) fields.push_back(csv_field(f));
      std::cout << join_strings(fields, ",") << "\n";
    }
  } else {
    for (const auto& line : out.text) std::cout << line << "\n";
  }
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::invalid_input: return kExitArgument;
    case ErrorKind::internal: return 1;
    default: return kExitDomain;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-abelian H^1 of cyclic groups acting on simple groups through diagram automorphisms"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool needs_m) {
    sub->add_option("--type", o.type, "Dynkin family A-G, optionally with the rank (A3)")->required();
    sub->add_option("--rank", o.rank, "rank of the simple group");
    sub->add_option("--isogeny", o.isogeny, "sc | adjoint")->capture_default_str();
    sub->add_option("--tau-order", o.tau_order, "order r of the diagram automorphism (1, 2 or 3)")->capture_default_str();
    if (needs_m) sub->add_option("--m", o.m, "order m of the cyclic group")->required();
    sub->add_flag("--dump-datum", o.dump_datum, "include the root datum and folded datum in the output");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
  };

  std::map<CLI::App*, std::function<Output(const Options&)>> handlers;
  auto command = [&](const std::string& name, const std::string& help, std::function<Output(const Options&)> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_format(sub);
    handlers[sub] = std::move(fn);
    return sub;
  };

  auto* h1 = command("h1", "cardinality and representatives of H^1", cmd_h1);
  add_common(h1, true);
  h1->add_option("--method", o.method, "auto | orbit | alcove | kac")
      ->check(CLI::IsMember({"auto", "orbit", "alcove", "kac"}))
      ->capture_default_str();
  h1->add_flag("--verify", o.verify, "cross-check the count by brute force (exit 4 on mismatch)");

  auto* torus = command("h1-torus", "invariant factors of H^1 for the maximal torus", cmd_h1_torus);
  add_common(torus, true);
  torus->add_flag("--verify", o.verify, "cross-check the group order by brute force (exit 4 on mismatch)");

  add_common(command("alcove", "rational points of the fundamental alcove with denominators dividing m/r", cmd_alcove),
             true);
  auto* kac = command("kac", "Kac coordinates, or their classes under affine symmetries", cmd_kac);
  add_common(kac, true);
  kac->add_flag("--classes", o.classes, "quotient by the affine diagram symmetries (adjoint only)");
  add_common(command("classify-autos", "order-m automorphisms in the outer class of tau", cmd_classify), true);

  auto* reduce = command("reduce", "reduce a rational point into the fundamental alcove", cmd_reduce);
  add_common(reduce, false);
  reduce->add_option("--point", o.point, "comma-separated rationals in invariant coordinates, e.g. 1/2,3/4")->required();

  auto* parahoric = command("parahoric", "order and automorphism attached to a rational point", cmd_parahoric);
  add_common(parahoric, false);
  parahoric->add_option("--theta", o.theta, "comma-separated rationals in invariant coordinates")->required();

  auto* comps = command("components", "connected components of the moduli of bundles", cmd_components);
  comps->add_option("--covering", o.covering, "covering description (JSON file)")->required();
  comps->add_option("--isogeny", o.isogeny, "sc | adjoint")->capture_default_str();

  auto* cov = command("covering-exists", "whether a covering with these ramification indices exists",
                      cmd_covering_exists);
  cov->add_option("--genus", o.genus, "genus of the base curve")->required();
  cov->add_option("--indices", o.indices, "comma-separated ramification indices, e.g. 2,2,4");

  command("paper-tables", "regenerate the reference tables and compare with the expected values", cmd_paper_tables);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitArgument;
  }

  // Kac coordinates have adjoint semantics unless asked otherwise.
  if (kac->parsed() && kac->count("--isogeny") == 0) o.isogeny = "adjoint";

  try {
    for (auto& [sub, fn] : handlers)
      if (sub->parsed()) {
        const Output out = fn(o);
        render(out, o.format);
        if (out.exit_code == kExitMismatch) std::cerr << "error: verification mismatch\n";
        return out.exit_code;
      }
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitArgument;
}
