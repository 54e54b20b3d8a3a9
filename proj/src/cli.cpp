#include "renner/cli.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "renner/errors.hpp"
#include "renner/serialize.hpp"

namespace renner::cli {

namespace {

bool needs_monoid_input(Command c) { return c != Command::rook_count; }

std::string full_label(JobSpec const& spec) {
  if (!spec.rank) return spec.type_label;
  if (spec.type_label.size() == 1) return spec.type_label + std::to_string(*spec.rank);
  if (cartan_matrix(spec.type_label).rank != *spec.rank) {
    throw InvalidInput("--rank " + std::to_string(*spec.rank) + " contradicts type " + spec.type_label);
  }
  return spec.type_label;
}

std::vector<int> parse_int_list(std::string const& text, std::string const& what) {
  std::vector<int> out;
  if (text.empty() || text == "none") return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto const comma = std::min(text.find(',', pos), text.size());
    std::string_view const tok(text.data() + pos, comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw InvalidInput("malformed " + what + " list '" + text + "'");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

DominantWeightSpec weight_spec(JobSpec const& spec, CartanMatrix const& cartan) {
  if (spec.weight) return DominantWeightSpec::from_weight(cartan, WeightVector{*spec.weight});
  RootSubset j0;
  for (int i : *spec.j0) {
    if (i < 1 || i > cartan.rank) {
      throw InvalidInput("J_0 index " + std::to_string(i) + " outside 1.." + std::to_string(cartan.rank));
    }
    j0.insert(i - 1);
  }
  return DominantWeightSpec::from_j0(cartan, j0);
}

std::string weight_text(WeightVector const& mu) {
  std::string s = "(";
  for (std::size_t i = 0; i < mu.coords.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(mu.coords[i]);
  }
  return s + ")";
}

std::string header(CartanMatrix const& cartan, DominantWeightSpec const& ws) {
  return cartan.name() + " weight " + weight_text(ws.mu) + ", J_0 = " + ws.j0.to_string();
}

void print_lattice(JobSpec const& spec, WeylGroup const& group, CrossSectionLattice const& lattice,
                   std::ostream& out) {
  auto const& cartan = group.cartan();
  if (spec.format == OutputFormat::json) {
    Json doc;
    doc["type"] = cartan.name();
    doc["weight"] = lattice.spec().mu.coords;
    Json items = Json::array();
    for (std::size_t e = 0; e < lattice.size(); ++e) {
      auto const& idem = lattice[e];
      Json item;
      item["e"] = lattice.label(e);
      for (auto [key, set] : {std::pair{"lambda_star", idem.lambda_star}, std::pair{"lambda_sub", idem.lambda_sub}}) {
        std::vector<int> one_based;
        for (int i : set.to_vector()) one_based.push_back(i + 1);
        item[key] = one_based;
      }
      item["centralizer_order"] = centralizer(group, idem).size();
      item["stabilizer_order"] = stabilizer(group, idem).size();
      item["star_group_order"] = star_group(group, idem).size();
      item["face"] = idem.face.to_vector();
      items.push_back(std::move(item));
    }
    doc["lattice"] = std::move(items);
    out << doc.dump(2) << '\n';
    return;
  }
  char const sep = spec.format == OutputFormat::csv ? ',' : ' ';
  if (spec.format == OutputFormat::table) {
    out << header(cartan, lattice.spec()) << "\n";
    out << "|Lambda| = " << lattice.size() << "\n";
  }
  auto cell = [&](std::string const& s, int width) {
    if (spec.format == OutputFormat::csv) {
      bool const quote = s.find(',') != std::string::npos;
      out << (quote ? "\"" + s + "\"" : s);
    } else {
      out << std::left << std::setw(width) << s;
    }
  };
  cell("e", 10); out << sep; cell("lambda*", 10); out << sep; cell("lambda_*", 10); out << sep;
  cell("|W(e)|", 8); out << sep; cell("|W_*(e)|", 9); out << sep; cell("|W^*(e)|", 9); out << sep;
  cell("|face|", 6); out << "\n";
  for (std::size_t e = 0; e < lattice.size(); ++e) {
    auto const& idem = lattice[e];
    bool const z = idem.is_zero;
    cell(lattice.label(e), 10); out << sep;
    cell(z ? "-" : idem.lambda_star.to_string(), 10); out << sep;
    cell(z ? "-" : idem.lambda_sub.to_string(), 10); out << sep;
    cell(std::to_string(centralizer(group, idem).size()), 8); out << sep;
    cell(std::to_string(stabilizer(group, idem).size()), 9); out << sep;
    cell(std::to_string(star_group(group, idem).size()), 9); out << sep;
    cell(std::to_string(idem.face.size()), 6);
    out << "\n";
  }
}

void print_build(JobSpec const& spec, RennerMonoid const& r, std::ostream& out) {
  auto const& lattice = r.lattice();
  if (spec.format == OutputFormat::json) {
    out << monoid_to_json(r).dump() << '\n';
    return;
  }
  if (spec.format == OutputFormat::csv) {
    out << "e,stratum_size\n";
    for (std::size_t e = 0; e < lattice.size(); ++e) {
      auto label = lattice.label(e);
      if (label.find(',') != std::string::npos) label = "\"" + label + "\"";
      out << label << ',' << r.stratum(e).size() << '\n';
    }
    return;
  }
  out << header(r.group().cartan(), lattice.spec()) << "\n";
  out << "|W| = " << r.group().size() << ", |V| = " << r.degree() << ", |R| = " << r.size() << "\n";
  for (std::size_t e = 0; e < lattice.size(); ++e) {
    out << "  |W " << lattice.label(e) << " W| = " << r.stratum(e).size() << "\n";
  }
}

void print_classes(JobSpec const& spec, RennerMonoid const& r, ConjClassification const& c,
                   std::ostream& out) {
  if (spec.format == OutputFormat::json) {
    out << classification_to_json(r, c).dump(2) << '\n';
    return;
  }
  auto const& lattice = r.lattice();
  if (spec.format == OutputFormat::csv) {
    out << "class,stratum,size,representative\n";
    for (std::size_t k = 0; k < c.classes.size(); ++k) {
      auto stratum = c.strata[k] ? lattice.label(*c.strata[k]) : std::string{};
      if (stratum.find(',') != std::string::npos) stratum = "\"" + stratum + "\"";
      auto rep = element_label(r, c.representatives[k]);
      if (rep.find(',') != std::string::npos) rep = "\"" + rep + "\"";
      out << k << ',' << stratum << ',' << c.classes[k].size() << ',' << rep << '\n';
    }
    return;
  }
  out << header(r.group().cartan(), lattice.spec()) << ": " << to_string(c.kind)
      << " conjugacy classes\n";
  bool const by_stratum =
      std::all_of(c.strata.begin(), c.strata.end(), [](auto const& s) { return s.has_value(); });
  if (by_stratum) {
    for (std::size_t e = 0; e < lattice.size(); ++e) {
      std::vector<std::size_t> ks;
      for (std::size_t k = 0; k < c.classes.size(); ++k) {
        if (*c.strata[k] == e) ks.push_back(k);
      }
      out << "e = " << lattice.label(e) << ": " << ks.size() << (ks.size() == 1 ? " class\n" : " classes\n");
      for (auto k : ks) {
        out << "  " << std::left << std::setw(24) << element_label(r, c.representatives[k])
            << " size " << c.classes[k].size() << "\n";
      }
    }
  } else {
    for (std::size_t k = 0; k < c.classes.size(); ++k) {
      out << "  " << std::left << std::setw(24) << element_label(r, c.representatives[k]) << " size "
          << c.classes[k].size() << "\n";
    }
  }
  out << "total: " << c.class_count() << "\n";
}

void print_counts(JobSpec const& spec, WeylGroup const& group, CrossSectionLattice const& lattice,
                  std::ostream& out) {
  auto const reports = orbit_reports(group, lattice);
  std::uint64_t total = 0;
  for (auto const& rep : reports) total += rep.orbit_count;
  if (spec.format == OutputFormat::csv) {
    out << orbit_summary_csv(lattice, reports);
    return;
  }
  if (spec.format == OutputFormat::json) {
    Json doc;
    doc["type"] = group.cartan().name();
    doc["weight"] = lattice.spec().mu.coords;
    Json rows = Json::array();
    for (auto const& rep : reports) {
      Json row;
      row["e"] = lattice.label(rep.e);
      row["centralizer_order"] = rep.centralizer_order;
      row["stabilizer_order"] = rep.stabilizer_order;
      row["coset_count"] = rep.coset_count;
      row["n_e"] = rep.orbit_count;
      std::vector<std::string> words;
      for (ElemId u : rep.orbit_reps) words.push_back(group.word_string(u));
      row["orbit_representatives"] = words;
      rows.push_back(std::move(row));
    }
    doc["strata"] = std::move(rows);
    doc["total"] = total;
    out << doc.dump(2) << '\n';
    return;
  }
  out << header(group.cartan(), lattice.spec()) << ": ~-conjugacy classes per stratum\n";
  out << std::left << std::setw(10) << "e" << std::setw(8) << "|W(e)|" << std::setw(10) << "|W_*(e)|"
      << std::setw(8) << "cosets" << "n_e\n";
  for (auto const& rep : reports) {
    out << std::left << std::setw(10) << lattice.label(rep.e) << std::setw(8) << rep.centralizer_order
        << std::setw(10) << rep.stabilizer_order << std::setw(8) << rep.coset_count << rep.orbit_count
        << "\n";
  }
  out << "total: " << total << "\n";
}

void print_reps(JobSpec const& spec, WeylGroup const& group, CrossSectionLattice const& lattice,
                std::ostream& out) {
  std::vector<std::size_t> per;
  for (auto const& idem : lattice.idempotents()) {
    per.push_back(group_conjugacy_classes(group, star_group(group, idem)).size());
  }
  auto const total = irreducible_rep_count(group, lattice);
  if (spec.format == OutputFormat::json) {
    Json doc;
    doc["type"] = group.cartan().name();
    doc["weight"] = lattice.spec().mu.coords;
    Json rows = Json::array();
    for (std::size_t e = 0; e < lattice.size(); ++e) {
      rows.push_back(Json{{"e", lattice.label(e)}, {"star_group_classes", per[e]}});
    }
    doc["strata"] = std::move(rows);
    doc["irreducible_rep_count"] = total;
    out << doc.dump(2) << '\n';
    return;
  }
  if (spec.format == OutputFormat::csv) {
    out << "e,star_group_classes\n";
    for (std::size_t e = 0; e < lattice.size(); ++e) {
      auto label = lattice.label(e);
      if (label.find(',') != std::string::npos) label = "\"" + label + "\"";
      out << label << ',' << per[e] << '\n';
    }
    return;
  }
  out << header(group.cartan(), lattice.spec()) << ": irreducible representations\n";
  for (std::size_t e = 0; e < lattice.size(); ++e) {
    out << "  " << std::left << std::setw(10) << lattice.label(e) << per[e] << "\n";
  }
  out << "total: " << total << "\n";
}

void print_rook(JobSpec const& spec, std::ostream& out) {
  auto const p = partition_counts(spec.rook_m);
  auto const total = munn_count_rook(spec.rook_m);
  if (spec.format == OutputFormat::json) {
    Json doc;
    doc["m"] = spec.rook_m;
    doc["partition_counts"] = p;
    doc["munn_class_count"] = total;
    out << doc.dump(2) << '\n';
    return;
  }
  if (spec.format == OutputFormat::csv) {
    out << "r,p\n";
    for (std::size_t k = 0; k < p.size(); ++k) out << k << ',' << p[k] << '\n';
    return;
  }
  out << "Munn classes of the rook monoid R_" << spec.rook_m << "\n";
  out << std::left << std::setw(6) << "r" << "p(r)\n";
  for (std::size_t k = 0; k < p.size(); ++k) out << std::left << std::setw(6) << k << p[k] << "\n";
  out << "total: " << total << "\n";
}

}  // namespace

void validate(JobSpec const& spec) {
  if (spec.command == Command::rook_count) {
    if (spec.rook_m < 0) throw InvalidInput("rook-count needs m >= 0");
    return;
  }
  if (spec.type_label.empty()) throw InvalidInput("--type is required");
  (void)cartan_matrix(full_label(spec));
  if (spec.weight.has_value() == spec.j0.has_value()) {
    throw InvalidInput("give exactly one of --weight and --j0");
  }
  if (spec.command == Command::classes && !spec.kind) throw InvalidInput("classes needs --kind");
  if (spec.command != Command::classes && spec.kind) {
    throw InvalidInput("--kind only applies to the classes command");
  }
}

int run(JobSpec const& spec, std::ostream& out, std::ostream& err) {
  try {
    validate(spec);
    if (!needs_monoid_input(spec.command)) {
      print_rook(spec, out);
      return kExitOk;
    }
    auto const cartan = cartan_matrix(full_label(spec));
    auto const ws = weight_spec(spec, cartan);

    switch (spec.command) {
      case Command::lattice:
      case Command::counts:
      case Command::reps: {
        auto const group = WeylGroup::generate(cartan, ws.mu, spec.caps.max_group_order);
        auto const lattice = cross_section_lattice(group, ws);
        if (spec.command == Command::lattice) print_lattice(spec, group, lattice, out);
        if (spec.command == Command::counts) print_counts(spec, group, lattice, out);
        if (spec.command == Command::reps) print_reps(spec, group, lattice, out);
        return kExitOk;
      }
      case Command::build: {
        print_build(spec, RennerMonoid::build(cartan, ws, spec.caps), out);
        return kExitOk;
      }
      case Command::classes: {
        auto const r = RennerMonoid::build(cartan, ws, spec.caps);
        ConjClassification c;
        switch (*spec.kind) {
          case ConjKind::sim: c = sim_conjugacy_classes(r); break;
          case ConjKind::munn: c = munn_classes(r); break;
          case ConjKind::semigroup: c = semigroup_conjugacy_classes(r, spec.max_pair_order); break;
          case ConjKind::action: c = action_conjugacy_classes(r, spec.max_pair_order); break;
        }
        print_classes(spec, r, c, out);
        return kExitOk;
      }
      case Command::rook_count: break;
    }
    return kExitOk;
  } catch (SizeCapExceeded const& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (InvalidType const& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (InvalidInput const& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

int main(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Renner monoids of J-irreducible monoids: cross-section lattices, conjugacy classes and "
      "irreducible-representation counts.\n"
      "The monoid depends only on the zero pattern J_0 of the weight, so --weight 2,0 and "
      "--j0 2 describe the same monoid (the vertex set is the orbit of the given weight)."};
  app.require_subcommand(1);

  JobSpec spec;
  std::string weight_text_opt;
  std::string j0_text;
  std::string kind_text;
  std::string format_text = "table";
  int rank_opt = 0;

  auto add_monoid_options = [&](CLI::App* sub) {
    sub->add_option("--type", spec.type_label, "Root system, e.g. A2, B3, G2, F4 (or a letter with --rank)")
        ->required();
    sub->add_option("--rank", rank_opt, "Rank, when --type is a bare letter");
    sub->add_option("--weight", weight_text_opt,
                    "Dominant weight in fundamental-weight coordinates, e.g. 1,0");
    sub->add_option("--j0", j0_text,
                    "Zero pattern J_0 as 1-based simple-root indices, e.g. 2,3 (or 'none')");
    sub->add_option("--max-group-order", spec.caps.max_group_order, "Weyl group size cap")
        ->capture_default_str();
    sub->add_option("--max-monoid-order", spec.caps.max_monoid_order, "Renner monoid size cap")
        ->capture_default_str();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
  };

  auto* lattice = app.add_subcommand("lattice", "Print the cross-section lattice");
  auto* build = app.add_subcommand("build", "Build the monoid and print its strata (json: full export)");
  auto* classes = app.add_subcommand("classes", "Print a conjugacy classification");
  auto* counts = app.add_subcommand("counts", "Per-stratum orbit counts n_e and their total");
  auto* reps = app.add_subcommand("reps", "Number of irreducible representations");
  auto* rook = app.add_subcommand("rook-count", "Munn class count of the rook monoid R_m");
  for (auto* sub : {lattice, build, classes, counts, reps}) {
    add_monoid_options(sub);
    add_format(sub);
  }
  classes->add_option("--kind", kind_text, "sim, munn, semigroup or action")
      ->check(CLI::IsMember({"sim", "munn", "semigroup", "action"}))
      ->required();
  classes->add_option("--max-pair-order", spec.max_pair_order,
                      "Largest monoid accepted by the O(|R|^2) semigroup/action oracles")
      ->capture_default_str();
  rook->add_option("m", spec.rook_m, "Degree of the rook monoid")->required();
  add_format(rook);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    std::ostringstream o, er;
    int const code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kExitOk : kExitValidation;
  }

  if (lattice->parsed()) spec.command = Command::lattice;
  if (build->parsed()) spec.command = Command::build;
  if (classes->parsed()) spec.command = Command::classes;
  if (counts->parsed()) spec.command = Command::counts;
  if (reps->parsed()) spec.command = Command::reps;
  if (rook->parsed()) spec.command = Command::rook_count;

  try {
    if (!weight_text_opt.empty()) spec.weight = parse_int_list(weight_text_opt, "weight");
    if (!j0_text.empty()) spec.j0 = parse_int_list(j0_text, "J_0");
  } catch (InvalidInput const& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  for (auto* sub : {lattice, build, classes, counts, reps}) {
    if (sub->count("--rank") > 0) spec.rank = rank_opt;
  }
  if (!kind_text.empty()) spec.kind = parse_conj_kind(kind_text);
  spec.format = format_text == "json"  ? OutputFormat::json
                : format_text == "csv" ? OutputFormat::csv
                                       : OutputFormat::table;
  return run(spec, out, err);
}

}  // namespace renner::cli
