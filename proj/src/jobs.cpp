#include "qsg/jobs.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "qsg/json_io.hpp"
#include "qsg/partitions.hpp"

namespace qsg {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitInputError = 1;
constexpr int kExitCheckFailed = 2;

std::string fmt_violation(double v) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(3) << v;
  return s.str();
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream s(csv);
  std::string item;
  while (std::getline(s, item, ',')) out.push_back(std::stoi(item));
  return out;
}

void emit_report_text(std::ostream& out, const RelationReport& r, const std::string& title) {
  out << title << ":\n";
  for (const auto& f : r.flags)
    out << "  " << (f.ok ? "pass" : "FAIL") << "  " << f.name << "  (violation " << fmt_violation(f.violation)
        << ")\n";
}

struct FlagTally {
  bool any_failure = false;
  void note(bool ok) { any_failure = any_failure || !ok; }
  void note(const RelationReport& r) { note(r.all_ok()); }
  int exit_code() const { return any_failure ? kExitCheckFailed : kExitPass; }
};

int filtration_analyze(const JobConfig& config, std::ostream& out) {
  if (config.command.size() < 3) throw std::invalid_argument("usage: filtration analyze <file.json>");
  const Json j = load_json_file(config.command[2]);
  const auto loaded = filtration_from_json(j);
  const auto& filt = loaded.filtration;
  if (filt.parts.empty()) throw std::invalid_argument("filtration has no parts");

  FlagTally tally;
  Json report;
  const auto validation = validate(filt);
  tally.note(validation.valid);
  report["valid"] = validation.valid;
  Json issues = Json::array();
  for (const auto& issue : validation.issues)
    issues.push_back(Json{{"what", issue.what}, {"part_a", issue.part_a}, {"part_b", issue.part_b}});
  report["issues"] = issues;

  if (validation.valid) {
    const auto proj = projections(filt);
    std::vector<Rational> weights = default_weights(filt.parts.size());
    if (config.options.count("weights")) {
      weights.clear();
      for (int w : parse_int_list(config.options.at("weights"))) weights.push_back(Rational(w));
    }
    const auto q = q_matrix(filt, weights);
    const auto group = color_automorphisms(q);
    report["projections"] = Json::array();
    for (const auto& p : proj) report["projections"].push_back(matrix_to_json(p));
    report["q_matrix"] = colored_matrix_to_json(q);
    report["classical_group"] = perm_group_to_json(group);
    report["vdw"] = Json::array();
    const bool tracial = filt.algebra->is_tracial();
    report["tracial"] = tracial;
    for (size_t i = 0; i < filt.parts.size(); ++i) {
      const auto vdw = vdw_parameter(filt, i);
      Json entry{{"part", i}, {"exact", vdw.exact_mode}};
      if (vdw.exact_mode) {
        entry["matrix"] = matrix_to_json(vdw.exact);
        const bool is_id = vdw.exact == ExactMat::identity(vdw.exact.rows());
        entry["identity"] = is_id;
        if (tracial) tally.note(is_id);
      } else {
        Json rows = Json::array();
        for (const auto& row : vdw.numeric) {
          Json r = Json::array();
          for (const auto& x : row) r.push_back(Json::array({x.real(), x.imag()}));
          rows.push_back(std::move(r));
        }
        entry["matrix"] = std::move(rows);
      }
      report["vdw"].push_back(std::move(entry));
    }
    std::vector<int> levels(filt.parts.size());
    for (size_t i = 0; i < levels.size(); ++i) levels[i] = static_cast<int>(i);
    const auto dirac = dirac_operator(filt, levels);
    report["dirac"] = Json{{"matrix", matrix_to_json(dirac.dirac)}};
    Json norms = Json::array();
    for (const auto& e : dirac.commutators)
      norms.push_back(Json{{"basis", e.basis_label}, {"commutator_norm", e.norm}});
    report["dirac"]["commutators"] = norms;

    if (config.format == "text") {
      out << "filtration: " << filt.parts.size() << " parts, algebra dimension " << filt.algebra->dim << "\n";
      out << "valid: yes\n";
      for (size_t i = 0; i < proj.size(); ++i) {
        out << "P" << i << " =\n" << render_exact_matrix(proj[i]);
      }
      out << "Q (weights";
      for (const auto& w : weights) out << " " << format_rational(w);
      out << ") =\n" << render_exact_matrix(q.entries);
      out << "colors: " << q.palette.size() << "\n";
      for (const auto& [value, mask] : color_components(q)) {
        out << "component " << value.str() << ":\n" << render_mask(mask);
      }
      out << "classical automorphism group order: " << group.order.str() << "\n";
      for (size_t i = 0; i < filt.parts.size(); ++i) {
        const auto& entry = report["vdw"][i];
        out << "vdw Q_" << i << (entry["exact"].get<bool>() ? " (exact)" : " (numeric)");
        if (entry.contains("identity") && entry["identity"].get<bool>()) out << " = identity";
        out << "\n";
      }
      out << "dirac commutator norms:";
      for (const auto& e : dirac.commutators) out << " " << std::setprecision(12) << e.norm;
      out << "\n";
    }
  } else if (config.format == "text") {
    out << "filtration: INVALID\n";
    for (const auto& issue : validation.issues)
      out << "  " << issue.what << " (parts " << issue.part_a << "," << issue.part_b << ")\n";
  }
  if (config.format == "json") out << report.dump(2) << "\n";
  return tally.exit_code();
}

int dual_qiso(const JobConfig& config, std::ostream& out) {
  if (!config.options.count("factors")) throw std::invalid_argument("usage: dual qiso --factors r1,r2,...");
  const auto factors = parse_int_list(config.options.at("factors"));
  FiniteAbelianGroup g(factors);
  if (static_cast<size_t>(g.size()) > config.max_size) throw std::invalid_argument("group exceeds QSG_MAX_SIZE");
  const auto parts = length_partition(g);
  const auto report = qm_distance_comparison(g);
  const bool all_two = std::all_of(factors.begin(), factors.end(), [](int r) { return r == 2; });

  FlagTally tally;
  // For Z_2^k the coincidence is asserted; otherwise it is an experiment.
  if (all_two) tally.note(report.partitions_coincide);

  Json j;
  j["factors"] = factors;
  j["order"] = g.size();
  Json sizes = Json::array();
  for (const auto& p : parts) sizes.push_back(p.size());
  j["length_class_sizes"] = sizes;
  j["q_color_classes"] = report.num_classes;
  j["partitions_coincide"] = report.partitions_coincide;
  j["asserted"] = all_two;

  std::string group_order;
  if (g.size() <= 64) {
    const auto grp = color_automorphisms(joint_coloring(g));
    group_order = grp.order.str();
    j["joint_coloring_group_order"] = group_order;
  }
  if (config.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << "dual group of order " << g.size() << ", factors";
    for (int r : factors) out << " " << r;
    out << "\nlength class sizes:";
    for (const auto& p : parts) out << " " << p.size();
    out << "\njoint Q-color classes: " << report.num_classes << "\n";
    out << "Q-color partition equals distance partition: " << (report.partitions_coincide ? "yes" : "no")
        << (all_two ? " (asserted)" : " (experiment)") << "\n";
    if (!group_order.empty()) out << "classical symmetry group of the joint coloring: " << group_order << "\n";
  }
  return tally.exit_code();
}

Factors parse_factors(const std::string& csv) {
  Factors out;
  std::stringstream s(csv);
  std::string item;
  int index = 1;
  while (std::getline(s, item, ',')) {
    const std::string label = "g" + std::to_string(index++);
    if (item == "z")
      out.push_back(FactorSpec::infinite_cyclic(label));
    else if (item.rfind('z', 0) == 0)
      out.push_back(FactorSpec::finite_cyclic(std::stoi(item.substr(1)), label));
    else
      throw std::invalid_argument("factor spec must be z or z<m>: " + item);
  }
  if (out.empty()) throw std::invalid_argument("no factors given");
  return out;
}

int words_partition(const JobConfig& config, std::ostream& out) {
  if (!config.options.count("factors"))
    throw std::invalid_argument("usage: words partition --factors z,z2,... --radius r [--mode ...]");
  const auto factors = parse_factors(config.options.at("factors"));
  const int radius = config.options.count("radius") ? std::stoi(config.options.at("radius")) : 3;
  const std::string mode_name = config.options.count("mode") ? config.options.at("mode") : "length-block";
  PartitionMode mode = PartitionMode::LengthAndBlock;
  if (mode_name == "length")
    mode = PartitionMode::Length;
  else if (mode_name == "shape")
    mode = PartitionMode::Shape;
  else if (mode_name != "length-block")
    throw std::invalid_argument("mode must be length, length-block or shape");

  const auto ball = enumerate_ball(factors, radius);
  if (ball.size() > config.max_size) throw std::invalid_argument("ball exceeds QSG_MAX_SIZE");
  const auto partition = partition_by(factors, ball, mode);

  Json j;
  j["radius"] = radius;
  j["ball_size"] = ball.size();
  Json classes = Json::array();
  for (const auto& [key, members] : partition) {
    Json cls;
    cls["key"] = key;
    cls["count"] = members.size();
    Json words = Json::array();
    for (const auto& w : members) words.push_back(format_word(factors, w));
    cls["words"] = std::move(words);
    classes.push_back(std::move(cls));
  }
  j["classes"] = std::move(classes);
  if (config.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << "ball of radius " << radius << ": " << ball.size() << " words\n";
    for (const auto& [key, members] : partition) {
      out << "(";
      for (size_t i = 0; i < key.size(); ++i) out << (i ? "," : "") << key[i];
      out << "): " << members.size() << " words:";
      for (const auto& w : members) out << " " << format_word(factors, w);
      out << "\n";
    }
  }
  return kExitPass;
}

int verify(const JobConfig& config, std::ostream& out) {
  FlagTally tally;
  Json j;
  if (config.options.count("fleet")) {
    const int count = std::stoi(config.options.at("fleet"));
    const auto fleet = make_fleet(config.seed, count);
    Json items = Json::array();
    for (const auto& inst : fleet) {
      const auto kplus = check_kplus_relations(inst.u);
      const auto suite = lemma52_suite(inst.u);
      const bool consistent = kplus.all_ok() == inst.expect_kplus && suite.agree;
      tally.note(consistent);
      items.push_back(Json{{"name", inst.name},
                           {"kplus", kplus.all_ok()},
                           {"expected_kplus", inst.expect_kplus},
                           {"lemma52_agree", suite.agree}});
      if (config.format == "text")
        out << (consistent ? "pass" : "FAIL") << "  " << inst.name << "  kplus=" << kplus.all_ok()
            << " expected=" << inst.expect_kplus << " lemma52_agree=" << suite.agree << "\n";
    }
    j["fleet"] = std::move(items);
  } else {
    if (config.command.size() < 2) throw std::invalid_argument("usage: verify <matrix.json> | verify --fleet N");
    auto u = operator_matrix_from_json(load_json_file(config.command[1]));
    u.tol = config.tol;
    // Which relation families gate the exit code; unitarity always does.
    const std::string expect = config.options.count("expect") ? config.options.at("expect") : "";
    const auto gated = [&expect](const std::string& name) {
      return expect.find(name) != std::string::npos;
    };
    const auto unitary = is_block_unitary(u);
    const auto magic = is_magic_unitary(u);
    tally.note(unitary);
    if (gated("magic")) tally.note(magic);
    j["unitary"] = relation_report_to_json(unitary);
    j["magic"] = relation_report_to_json(magic);
    if (config.format == "text") {
      emit_report_text(out, unitary, "block unitarity");
      emit_report_text(out, magic, "magic unitarity");
    }
    if (u.signed_labels) {
      const auto hplus = check_hplus_relations(u);
      const auto kplus = check_kplus_relations(u);
      tally.note(hplus);
      if (gated("kplus")) tally.note(kplus);
      j["hplus"] = relation_report_to_json(hplus);
      j["kplus"] = relation_report_to_json(kplus);
      if (config.format == "text") {
        emit_report_text(out, hplus, "H+ relations");
        emit_report_text(out, kplus, "K+ relations");
      }
      if (hplus.all_ok()) {
        const auto suite = lemma52_suite(u);
        tally.note(suite.agree);
        j["lemma52"] = Json{{"intertwiner", suite.intertwiner.ok},
                            {"normal_entries", suite.normal_entries.ok},
                            {"block2", suite.block2.ok},
                            {"agree", suite.agree}};
        if (config.format == "text")
          out << "lemma52: intertwiner=" << suite.intertwiner.ok << " normal=" << suite.normal_entries.ok
              << " block2=" << suite.block2.ok << " agree=" << suite.agree << "\n";
      }
    }
  }
  if (config.format == "json") out << j.dump(2) << "\n";
  return tally.exit_code();
}

int partitions_cmd(const JobConfig& config, std::ostream& out) {
  const int upper = config.options.count("upper") ? std::stoi(config.options.at("upper")) : 2;
  const int lower = config.options.count("lower") ? std::stoi(config.options.at("lower")) : 2;
  const bool pairs_only = config.options.count("pairs");
  const bool all_colors = config.options.count("all-colors");
  if (static_cast<size_t>(1) << (upper + lower) > config.max_size)
    throw std::invalid_argument("coloring enumeration exceeds QSG_MAX_SIZE");
  const auto predicate = [&](const ColoredNCPartition& p) {
    if (pairs_only && !is_pair_partition(p)) return false;
    return all_colors || balanced_colors(p);
  };
  const auto partitions = enumerate_partitions(upper, lower, predicate, 12);

  FlagTally tally;
  Json j;
  j["upper"] = upper;
  j["lower"] = lower;
  j["count"] = partitions.size();
  if (config.format == "text") out << partitions.size() << " colored noncrossing partitions\n";
  Json items = Json::array();
  for (const auto& p : partitions) {
    Json item;
    item["blocks"] = p.blocks();
    std::string colors;
    for (const auto c : p.colors) colors += (c == LegColor::White ? 'w' : 'b');
    item["colors"] = colors;
    items.push_back(std::move(item));
    if (config.format == "text") {
      out << "  blocks";
      for (const auto& b : p.blocks()) {
        out << " {";
        for (size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << b[i];
        out << "}";
      }
      out << "  colors " << colors << "\n";
    }
  }
  j["partitions"] = std::move(items);

  if (config.options.count("span")) {
    const auto u = operator_matrix_from_json(load_json_file(config.options.at("span")));
    const auto report = span_containment_check(partitions, u, upper, lower);
    tally.note(report.all_intertwiners());
    j["span"] = Json{{"all_intertwiners", report.all_intertwiners()},
                     {"span_rank", report.span_rank},
                     {"solution_dim", report.solution_dim}};
    if (config.format == "text")
      out << "span check: all_intertwiners=" << report.all_intertwiners() << " span_rank=" << report.span_rank
          << " solution_dim=" << report.solution_dim << "\n";
  }
  if (config.format == "json") out << j.dump(2) << "\n";
  return tally.exit_code();
}

int ergodic_spectral(const JobConfig& config, std::ostream& out) {
  const std::string name = config.options.count("group") ? config.options.at("group") : "s3";
  const auto g = builtin_group(name);
  const auto dec = regular_spectral_decomposition(g);
  Json j;
  j["group"] = name;
  Json subspaces = Json::array();
  std::vector<int> dims_by_element(g.order, 1);  // regular action: all spectral subspaces full
  size_t total = 0;
  for (const auto& s : dec) {
    subspaces.push_back(Json{{"irrep", s.label}, {"irrep_dim", s.irrep_dim}, {"subspace_dim", s.basis.size()}});
    total += s.basis.size();
  }
  j["subspaces"] = std::move(subspaces);
  FlagTally tally;
  tally.note(total == static_cast<size_t>(g.order));
  std::vector<int> support(g.order, 1);
  if (config.options.count("support")) {
    support = parse_int_list(config.options.at("support"));
    if (static_cast<int>(support.size()) != g.order)
      throw std::invalid_argument("support list must have one entry per group element");
  }
  const auto check = support_subgroup_check(g, support);
  j["support_is_subgroup"] = check.is_subgroup;
  if (!check.reason.empty()) j["support_reason"] = check.reason;
  if (config.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << "regular spectral decomposition of " << name << ":\n";
    for (const auto& s : dec)
      out << "  " << s.label << " (irrep dim " << s.irrep_dim << "): subspace dim " << s.basis.size() << "\n";
    out << "support is a subgroup: " << (check.is_subgroup ? "yes" : "no");
    if (!check.reason.empty()) out << " (" << check.reason << ")";
    out << "\n";
  }
  return tally.exit_code();
}

}  // namespace

int run_job(const JobConfig& config, std::ostream& out) {
  try {
    if (config.command.empty()) throw std::invalid_argument("no command given");
    const std::string& head = config.command[0];
    if (head == "filtration" && config.command.size() > 1 && config.command[1] == "analyze")
      return filtration_analyze(config, out);
    if (head == "dual" && config.command.size() > 1 && config.command[1] == "qiso") return dual_qiso(config, out);
    if (head == "words" && config.command.size() > 1 && config.command[1] == "partition")
      return words_partition(config, out);
    if (head == "verify") return verify(config, out);
    if (head == "partitions") return partitions_cmd(config, out);
    if (head == "ergodic" && config.command.size() > 1 && config.command[1] == "spectral")
      return ergodic_spectral(config, out);
    throw std::invalid_argument("unknown command: " + head);
  } catch (const std::invalid_argument& e) {
    out << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::domain_error& e) {
    out << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

}  // namespace qsg
