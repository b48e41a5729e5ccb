#pragma once

// Command-line front end. Exit codes: 0 when the primary question is
// answered affirmatively (completable / classified / produced), 1 for a
// negative answer accompanied by a certificate, 2 for parse or usage
// errors (with a machine-readable JSON error on stderr).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "alto/completion.hpp"
#include "alto/io.hpp"
#include "alto/obstruction.hpp"
#include "alto/oracle.hpp"

namespace alto {

namespace detail {

inline std::string error_json(const std::string& kind, const std::string& message) {
  nlohmann::ordered_json j;
  j["error"]["kind"] = kind;
  j["error"]["message"] = message;
  return j.dump() + "\n";
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline const char* witness_kind_name(WegnerWitness::Kind k) {
  switch (k) {
  case WegnerWitness::Kind::Cycle: return "cycle";
  case WegnerWitness::Kind::Tent: return "tent";
  case WegnerWitness::Kind::Claw: return "claw";
  case WegnerWitness::Kind::Net: return "net";
  }
  return "?";
}

inline nlohmann::ordered_json certificate_json(const CompletionCertificate& cert) {
  nlohmann::ordered_json j;
  if (const auto* npi = std::get_if<NotProperInterval>(&cert)) {
    j["kind"] = "not_proper_interval";
    j["witness"]["kind"] = witness_kind_name(npi->witness.kind);
    j["witness"]["vertices"] = npi->witness.vertices;
  } else if (const auto* dc = std::get_if<DirectedCycle>(&cert)) {
    j["kind"] = "directed_cycle";
    j["cycle"] = dc->cycle;
  } else if (const auto* opp = std::get_if<OpposingUnbalancedArcs>(&cert)) {
    j["kind"] = "opposing_unbalanced_arcs";
    j["positive"] = {opp->positive_arc.first, opp->positive_arc.second};
    j["negative"] = {opp->negative_arc.first, opp->negative_arc.second};
    j["order"] = opp->order.order;
  }
  return j;
}

inline std::string certificate_summary(const CompletionCertificate& cert) {
  std::ostringstream os;
  os << "certificate: ";
  if (const auto* npi = std::get_if<NotProperInterval>(&cert)) {
    os << "not-proper-interval " << witness_kind_name(npi->witness.kind) << " [";
    for (std::size_t i = 0; i < npi->witness.vertices.size(); ++i)
      os << (i ? " " : "") << npi->witness.vertices[i];
    os << "]";
  } else if (const auto* dc = std::get_if<DirectedCycle>(&cert)) {
    os << "directed-cycle [";
    for (std::size_t i = 0; i < dc->cycle.size(); ++i) os << (i ? " " : "") << dc->cycle[i];
    os << "]";
  } else if (const auto* opp = std::get_if<OpposingUnbalancedArcs>(&cert)) {
    os << "opposing-unbalanced-arcs positive=(" << opp->positive_arc.first << ","
       << opp->positive_arc.second << ") negative=(" << opp->negative_arc.first << ","
       << opp->negative_arc.second << ")";
  }
  return os.str();
}

inline nlohmann::ordered_json document_json(const PogDocument& doc) {
  return nlohmann::ordered_json::parse(serialize(doc));
}

} // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"partially oriented graphs: completion to acyclic local tournaments"};
  app.name("alto");
  app.require_subcommand(1);

  std::string file, outfile, entry_name, report_path;
  int size = 0;
  bool dual_flag = false, allow_long = false;
  int max_n = 0, threads = 1;

  auto* c_check = app.add_subcommand("check", "decide whether FILE is completable");
  c_check->add_option("FILE", file)->required();

  auto* c_complete = app.add_subcommand("complete", "complete FILE or print a certificate");
  c_complete->add_option("FILE", file)->required();
  c_complete->add_option("-o,--output", outfile, "write the completed orientation here");

  auto* c_classify = app.add_subcommand("classify", "name the catalog entry matching FILE");
  c_classify->add_option("FILE", file)->required();

  auto* c_extract = app.add_subcommand("extract", "extract a minimal obstruction from FILE");
  c_extract->add_option("FILE", file)->required();

  auto* c_catalog = app.add_subcommand("catalog", "emit a catalog family member");
  c_catalog->add_option("ENTRY", entry_name, "family name, e.g. Claw or F3_vi")->required();
  c_catalog->add_option("--size", size, "vertex count for parametric families");
  c_catalog->add_flag("--dual", dual_flag, "reverse all arcs");

  auto* c_enumerate = app.add_subcommand("enumerate", "exhaustively enumerate obstructions");
  c_enumerate->add_option("--max-n", max_n, "largest vertex count")->required();
  c_enumerate->add_option("--report", report_path, "write the JSON report here");
  c_enumerate->add_option("--threads", threads, "worker threads");
  c_enumerate->add_flag("--allow-long", allow_long, "permit the long n = 6 run");

  auto* c_senum = app.add_subcommand("straight-enum", "straight enumeration of FILE's underlying graph");
  c_senum->add_option("FILE", file)->required();

  auto* c_impl = app.add_subcommand("implication-classes", "implication classes of FILE's underlying graph");
  c_impl->add_option("FILE", file)->required();

  auto* c_dot = app.add_subcommand("export-dot", "DOT rendering of FILE");
  c_dot->add_option("FILE", file)->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << detail::error_json("usage", e.what());
    return 2;
  }

  try {
    auto load = [&]() {
      PogDocument doc = parse_pog_document(detail::slurp(file));
      return std::pair<PogDocument, Pog>(doc, to_pog(doc));
    };

    if (*c_check) {
      auto [doc, pog] = load();
      auto cert = complete(pog);
      if (std::holds_alternative<Completed>(cert)) {
        out << "COMPLETABLE\n";
        return 0;
      }
      out << "UNCOMPLETABLE\n" << detail::certificate_summary(cert) << "\n";
      return 1;
    }

    if (*c_complete) {
      auto [doc, pog] = load();
      auto cert = complete(pog);
      if (const auto* done = std::get_if<Completed>(&cert)) {
        std::string text = serialize(to_document(done->orientation, doc.name));
        if (!outfile.empty()) {
          std::ofstream of(outfile, std::ios::binary);
          if (!of) throw ParseError("cannot open output file: " + outfile);
          of << text;
        } else {
          out << text;
        }
        return 0;
      }
      nlohmann::ordered_json j;
      j["completable"] = false;
      j["certificate"] = detail::certificate_json(cert);
      out << j.dump(2) << "\n";
      return 1;
    }

    if (*c_classify) {
      auto [doc, pog] = load();
      if (auto entry = classify_obstruction(pog)) {
        out << entry_label(*entry) << "\n";
        return 0;
      }
      out << "not an obstruction\n";
      return 1;
    }

    if (*c_extract) {
      auto [doc, pog] = load();
      if (can_complete(pog)) {
        err << detail::error_json("precondition", "input is completable; nothing to extract");
        return 2;
      }
      auto trace = extract_obstruction_trace(pog);
      auto entry = classify_obstruction(trace.obstruction);
      nlohmann::ordered_json j;
      j["obstruction"] = detail::document_json(to_document(trace.obstruction));
      j["classification"] = entry ? nlohmann::ordered_json(entry_label(*entry))
                                  : nlohmann::ordered_json(nullptr);
      out << j.dump(2) << "\n";
      return 0;
    }

    if (*c_catalog) {
      auto family = parse_family(entry_name);
      if (!family) {
        err << detail::error_json("usage", "unknown catalog family: " + entry_name);
        return 2;
      }
      Pog built = catalog_build({*family, size, dual_flag});
      CatalogEntry e{*family, built.vertex_count(), dual_flag};
      out << serialize(to_document(built, entry_label(e)));
      return 0;
    }

    if (*c_enumerate) {
      if (max_n > 5 && !allow_long) {
        err << detail::error_json("usage",
                                  "enumerate with --max-n 6 is a long run; pass --allow-long");
        return 2;
      }
      auto report = enumerate_obstructions(max_n, threads);
      nlohmann::ordered_json j;
      j["max_n"] = report.max_n;
      j["counts"] = report.counts;
      j["obstructions"] = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < report.codes.size(); ++i) {
        nlohmann::ordered_json item;
        item["code"] = report.codes[i];
        item["graph"] = detail::document_json(to_document(report.representatives[i]));
        j["obstructions"].push_back(std::move(item));
      }
      if (!report_path.empty()) {
        std::ofstream of(report_path, std::ios::binary);
        if (!of) throw ParseError("cannot open report file: " + report_path);
        of << j.dump(2) << "\n";
        for (std::size_t k = 0; k < report.counts.size(); ++k)
          out << "obstructions on " << k << " vertices: " << report.counts[k] << "\n";
        out << "total: " << report.codes.size() << "\n";
      } else {
        out << j.dump(2) << "\n";
      }
      return 0;
    }

    if (*c_senum) {
      auto [doc, pog] = load();
      Graph g = underlying(pog);
      if (auto se = straight_enumeration(g)) {
        out << "order:";
        for (VertexId v : se->order) out << " " << v;
        out << "\n";
        return 0;
      }
      auto w = wegner_witness(g);
      out << "not a proper interval graph: " << detail::witness_kind_name(w.kind) << " [";
      for (std::size_t i = 0; i < w.vertices.size(); ++i) out << (i ? " " : "") << w.vertices[i];
      out << "]\n";
      return 1;
    }

    if (*c_impl) {
      auto [doc, pog] = load();
      Graph g = underlying(pog);
      auto part = implication_classes(g);
      for (std::size_t c = 0; c < part.classes.size(); ++c) {
        out << "class " << c << (part.trivial(static_cast<int>(c)) ? " (trivial):" : ":");
        out << " edges";
        for (const auto& [u, v] : part.classes[c]) out << " {" << u << "," << v << "}";
        out << "; orientation";
        for (const auto& [u, v] : part.orientation[c]) out << " (" << u << "," << v << ")";
        out << "\n";
      }
      return 0;
    }

    if (*c_dot) {
      auto [doc, pog] = load();
      out << export_dot(pog, doc.name.value_or("pog"));
      return 0;
    }
  } catch (const ParseError& e) {
    err << detail::error_json("parse", e.what());
    return 2;
  } catch (const std::exception& e) {
    err << detail::error_json("input", e.what());
    return 2;
  }
  return 2;
}

} // namespace alto
