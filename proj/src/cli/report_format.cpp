#include <string>

#include "json.hpp"
#include "tilab/cli.hpp"

namespace tilab::cli {
namespace {

using nlohmann::ordered_json;

ordered_json rational(const IndexValue& v) {
  return {{"num", v.numerator().str()}, {"den", v.denominator().str()}};
}

ordered_json optional_rational(const std::optional<IndexValue>& v) {
  return v ? rational(*v) : ordered_json(nullptr);
}

ordered_json params_json(const ClassParams& p) {
  return {{"n", p.n}, {"m", p.m}, {"k", p.k}};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string bool_csv(bool b) { return b ? "true" : "false"; }

std::string sense_name(Sense s) { return s == Sense::Minimize ? "min" : "max"; }

std::string parity_name(const std::optional<Parity>& p) {
  if (!p) return "";
  return *p == Parity::Even ? "even" : "odd";
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string joined(const std::vector<CanonicalCode>& codes, const char* sep) {
  std::string out;
  for (const CanonicalCode& c : codes) {
    if (!out.empty()) out += sep;
    out += c.graph6;
  }
  return out;
}

std::string value_or_empty(const std::optional<IndexValue>& v) {
  return v ? v->to_string() : "";
}

}  // namespace

void write_index(std::ostream& out, Format f, const std::vector<IndexRecord>& records,
                 std::size_t kinds_per_graph) {
  if (f == Format::Json) {
    ordered_json arr = ordered_json::array();
    for (const IndexRecord& r : records) {
      arr.push_back({{"graph", r.graph6}, {"kind", index_id(r.kind)}, {"value", rational(r.value)}});
    }
    out << arr.dump(2) << '\n';
    return;
  }
  if (f == Format::Csv) {
    out << "graph,kind,value\n";
    for (const IndexRecord& r : records) {
      out << r.graph6 << ',' << index_id(r.kind) << ',' << r.value << '\n';
    }
    return;
  }
  if (kinds_per_graph == 1) {
    for (const IndexRecord& r : records) out << r.value << '\n';
    return;
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    out << index_info(records[i].kind).symbol << '=' << records[i].value;
    out << ((i + 1) % kinds_per_graph == 0 ? '\n' : ' ');
  }
}

void write_vk(std::ostream& out, Format f, const std::vector<VkRecord>& records) {
  if (f == Format::Json) {
    ordered_json arr = ordered_json::array();
    for (const VkRecord& r : records) arr.push_back({{"graph", r.graph6}, {"k", r.k}, {"vk", r.vk}});
    out << arr.dump(2) << '\n';
  } else if (f == Format::Csv) {
    out << "graph,k,vk\n";
    for (const VkRecord& r : records) out << r.graph6 << ',' << r.k << ',' << r.vk << '\n';
  } else {
    for (const VkRecord& r : records) out << r.vk << '\n';
  }
}

void write_construct(std::ostream& out, Format f, const PartitionSpec& spec,
                     const std::string& graph6) {
  if (f == Format::Json) {
    ordered_json j = {{"params", params_json(spec.params)},
                      {"graph6", graph6},
                      {"sizes", spec.sizes},
                      {"s", spec.s},
                      {"t", spec.t}};
    out << j.dump(2) << '\n';
    return;
  }
  std::string sizes;
  for (int s : spec.sizes) sizes += (sizes.empty() ? "" : " ") + std::to_string(s);
  if (f == Format::Csv) {
    out << "n,m,k,s,t,sizes,graph6\n";
    out << spec.params.n << ',' << spec.params.m << ',' << spec.params.k << ',' << spec.s << ','
        << spec.t << ',' << sizes << ',' << graph6 << '\n';
    return;
  }
  out << graph6 << '\n' << "sizes " << sizes << '\n';
}

void write_scan(std::ostream& out, Format f, const std::vector<ExtremalReport>& reports) {
  if (f == Format::Json) {
    ordered_json arr = ordered_json::array();
    for (const ExtremalReport& r : reports) {
      ordered_json optimizers = ordered_json::array();
      for (const CanonicalCode& c : r.optimizer_codes) optimizers.push_back(c.graph6);
      arr.push_back({
          {"claim", nullptr},
          {"params", params_json(r.params)},
          {"kind", index_id(r.kind)},
          {"optimum", rational(r.optimum)},
          {"optimizers", optimizers},
          {"flags",
           {{"unique", r.unique()},
            {"matches_construction", r.matches_construction},
            {"matches_closed_form", r.matches_closed_form},
            {"regime_restricted", r.closed_form.regime_restricted},
            {"erratum_suspect", r.closed_form.erratum_suspect}}},
          {"verdicts", ordered_json::array()},
          {"sense", sense_name(r.sense)},
          {"class_size", r.class_size},
          {"optimizer_count", r.optimizer_count},
          {"closed_form", rational(r.closed_form.value)},
          {"construction_value", rational(r.construction_value)},
      });
    }
    out << arr.dump(2) << '\n';
    return;
  }
  if (f == Format::Csv) {
    out << "n,m,k,kind,sense,optimum,optimizer_classes,optimizer_count,class_size,"
           "matches_construction,matches_closed_form,closed_form,construction_value,"
           "regime_restricted,erratum_suspect,optimizers\n";
    for (const ExtremalReport& r : reports) {
      out << r.params.n << ',' << r.params.m << ',' << r.params.k << ',' << index_id(r.kind)
          << ',' << sense_name(r.sense) << ',' << r.optimum << ',' << r.optimizer_codes.size()
          << ',' << r.optimizer_count << ',' << r.class_size << ','
          << bool_csv(r.matches_construction) << ',' << bool_csv(r.matches_closed_form) << ','
          << r.closed_form.value << ',' << r.construction_value << ','
          << bool_csv(r.closed_form.regime_restricted) << ','
          << bool_csv(r.closed_form.erratum_suspect) << ',' << joined(r.optimizer_codes, ";")
          << '\n';
    }
    return;
  }
  for (const ExtremalReport& r : reports) {
    out << index_id(r.kind) << " n=" << r.params.n << " m=" << r.params.m
        << " k=" << r.params.k << ' ' << sense_name(r.sense) << '=' << r.optimum
        << " optimizers=" << r.optimizer_codes.size() << " [" << joined(r.optimizer_codes, " ")
        << "] class_size=" << r.class_size
        << " construction=" << yes_no(r.matches_construction)
        << " closed_form=" << r.closed_form.value << " (" << yes_no(r.matches_closed_form) << ')';
    if (r.closed_form.regime_restricted) out << " regime-restricted";
    if (r.closed_form.erratum_suspect) out << " erratum-suspect";
    out << '\n';
  }
}

void write_verify(std::ostream& out, Format f, const std::vector<VerificationReport>& reports) {
  if (f == Format::Json) {
    ordered_json arr = ordered_json::array();
    for (const VerificationReport& r : reports) {
      ordered_json verdicts = ordered_json::array();
      for (const TupleVerdict& v : r.verdicts) {
        verdicts.push_back({
            {"n", v.params.n},
            {"m", v.params.m},
            {"k", v.params.k},
            {"parity", v.parity ? ordered_json(parity_name(v.parity)) : ordered_json(nullptr)},
            {"verdict", verdict_name(v.verdict)},
            {"expected", optional_rational(v.expected)},
            {"actual", optional_rational(v.actual)},
            {"note", v.note},
        });
      }
      arr.push_back({
          {"claim", r.claim},
          {"params",
           {{"n_min", r.grid.n_min},
            {"n_max", r.grid.n_max},
            {"k_min", r.grid.k_min},
            {"k_max", r.grid.k_max},
            {"scan_n_max", r.grid.scan_n_max},
            {"min_part_size", r.grid.min_part_size}}},
          {"kind", r.kind ? ordered_json(index_id(*r.kind)) : ordered_json(nullptr)},
          {"optimum", nullptr},
          {"optimizers", ordered_json::array()},
          {"flags",
           {{"confirmed", r.count(Verdict::Confirmed)},
            {"refuted", r.count(Verdict::Refuted)},
            {"regime_flagged", r.count(Verdict::RegimeFlagged)}}},
          {"verdicts", verdicts},
      });
    }
    out << arr.dump(2) << '\n';
    return;
  }
  if (f == Format::Csv) {
    out << "claim,kind,n,m,k,parity,verdict,expected,actual,note\n";
    for (const VerificationReport& r : reports) {
      for (const TupleVerdict& v : r.verdicts) {
        out << r.claim << ',' << (r.kind ? index_id(*r.kind) : "") << ',' << v.params.n << ','
            << v.params.m << ',' << v.params.k << ',' << parity_name(v.parity) << ','
            << verdict_name(v.verdict) << ',' << value_or_empty(v.expected) << ','
            << value_or_empty(v.actual) << ',' << csv_quote(v.note) << '\n';
      }
    }
    return;
  }
  for (const VerificationReport& r : reports) {
    out << r.claim << ": " << r.count(Verdict::Confirmed) << " confirmed, "
        << r.count(Verdict::Refuted) << " refuted, " << r.count(Verdict::RegimeFlagged)
        << " regime-flagged\n";
    for (const TupleVerdict& v : r.verdicts) {
      if (v.verdict == Verdict::Confirmed) continue;
      out << "  " << verdict_name(v.verdict) << " n=" << v.params.n << " m=" << v.params.m
          << " k=" << v.params.k;
      if (v.parity) out << " (" << parity_name(v.parity) << ')';
      if (v.expected) out << " printed=" << *v.expected;
      if (v.actual) out << " actual=" << *v.actual;
      if (!v.note.empty()) out << "  " << v.note;
      out << '\n';
    }
  }
}

void write_fuzz(std::ostream& out, Format f, const std::vector<FuzzReport>& reports) {
  if (f == Format::Json) {
    ordered_json arr = ordered_json::array();
    for (const FuzzReport& r : reports) {
      ordered_json violations = ordered_json::array();
      for (const FuzzViolation& v : r.violations) {
        violations.push_back({{"graph6", v.graph6},
                              {"u", v.u},
                              {"v", v.v},
                              {"before", rational(v.before)},
                              {"after", rational(v.after)}});
      }
      arr.push_back({{"kind", index_id(r.kind)},
                     {"trials", r.trials},
                     {"n_min", r.n_min},
                     {"n_max", r.n_max},
                     {"seed", r.seed},
                     {"rejected_disconnected", r.rejected_disconnected},
                     {"resampled_complete", r.resampled_complete},
                     {"violations", violations}});
    }
    out << arr.dump(2) << '\n';
    return;
  }
  if (f == Format::Csv) {
    out << "kind,trials,n_min,n_max,seed,violations,rejected_disconnected,resampled_complete\n";
    for (const FuzzReport& r : reports) {
      out << index_id(r.kind) << ',' << r.trials << ',' << r.n_min << ',' << r.n_max << ','
          << r.seed << ',' << r.violations.size() << ',' << r.rejected_disconnected << ','
          << r.resampled_complete << '\n';
    }
    return;
  }
  for (const FuzzReport& r : reports) {
    out << index_id(r.kind) << " trials=" << r.trials << " violations=" << r.violations.size()
        << " rejected=" << r.rejected_disconnected << " resampled=" << r.resampled_complete
        << '\n';
    for (const FuzzViolation& v : r.violations) {
      out << "  " << v.graph6 << " +" << v.u << '-' << v.v << ": " << v.before << " -> "
          << v.after << '\n';
    }
  }
}

}  // namespace tilab::cli
