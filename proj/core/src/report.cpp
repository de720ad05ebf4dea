#include "hgsq/report.hpp"

#include <sstream>

#include <json.hpp>

#include "hgsq/error.hpp"
#include "hgsq/formula.hpp"

namespace hgsq {

namespace {

using nlohmann::json;

json triple_json(const Triple& t) { return json{{"d", t.d}, {"e", t.e}, {"k", t.k}}; }

Triple triple_from(const json& j) {
  return {j.at("d").get<u64>(), j.at("e").get<u64>(), j.at("k").get<u64>()};
}

std::string triple_text(const Triple& t) {
  return std::to_string(t.d) + "," + std::to_string(t.e) + "," + std::to_string(t.k);
}

json row_json(const ReportRow& row) {
  return json{{"n", to_decimal(row.n)},
              {"gamma", triple_json(row.gamma)},
              {"g", triple_json(row.g)},
              {"count", to_decimal(row.count)},
              {"status", row.incompatible ? "incompatible" : "ok"},
              {"method", std::string(row_method_name(row.method))}};
}

BigInt decimal(const json& j, const char* field) {
  const std::string s = j.at(field).get<std::string>();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(Errc::InvalidArgument, std::string(field) + " is not a decimal string");
  }
  return BigInt(s);
}

ReportRow row_from(const json& j) {
  ReportRow row;
  row.n = decimal(j, "n");
  row.gamma = triple_from(j.at("gamma"));
  row.g = triple_from(j.at("g"));
  row.count = decimal(j, "count");
  const std::string status = j.at("status").get<std::string>();
  if (status != "ok" && status != "incompatible") {
    throw Error(Errc::InvalidArgument, "unknown status " + status);
  }
  row.incompatible = status == "incompatible";
  const std::string method = j.at("method").get<std::string>();
  if (method == "formula") {
    row.method = RowMethod::Formula;
  } else if (method == "oracle") {
    row.method = RowMethod::Oracle;
  } else if (method == "both") {
    row.method = RowMethod::Both;
  } else {
    throw Error(Errc::InvalidArgument, "unknown method " + method);
  }
  return row;
}

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& ex) {
    throw Error(Errc::InvalidArgument, ex.what());
  }
}

}  // namespace

Triple triple_of(const GroupSpec& g) noexcept { return {g.d, g.e, g.k}; }

std::string_view row_method_name(RowMethod m) noexcept {
  switch (m) {
    case RowMethod::Formula: return "formula";
    case RowMethod::Oracle: return "oracle";
    case RowMethod::Both: return "both";
  }
  return "formula";
}

ReportRow formula_row(const GroupSpec& galois, const GroupSpec& type) {
  const PairContext ctx = build_context(galois, type);
  ReportRow row;
  row.n = galois.n;
  row.gamma = triple_of(galois);
  row.g = triple_of(type);
  row.incompatible = !ctx.compatible;
  row.count = ctx.compatible ? count_hgs(ctx) : BigInt(0);
  return row;
}

std::string to_json(const ReportRow& row) { return row_json(row).dump(); }

std::string to_json(const std::vector<ReportRow>& rows) {
  json arr = json::array();
  for (const ReportRow& r : rows) arr.push_back(row_json(r));
  return arr.dump(2);
}

ReportRow parse_report_row(std::string_view text) {
  return guarded([&] { return row_from(json::parse(text)); });
}

std::vector<ReportRow> parse_report_rows(std::string_view text) {
  return guarded([&] {
    const json arr = json::parse(text);
    if (!arr.is_array()) throw Error(Errc::InvalidArgument, "expected a JSON array");
    std::vector<ReportRow> rows;
    for (const json& j : arr) rows.push_back(row_from(j));
    return rows;
  });
}

std::string to_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << "n,gamma,g,count,status,method\n";
  for (const ReportRow& r : rows) {
    out << to_decimal(r.n) << ",\"" << triple_text(r.gamma) << "\",\"" << triple_text(r.g)
        << "\"," << to_decimal(r.count) << ',' << (r.incompatible ? "incompatible" : "ok") << ','
        << row_method_name(r.method) << '\n';
  }
  return out.str();
}

std::string to_markdown(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << "| n | Gamma | G | e(Gamma, G) | status | method |\n";
  out << "|---|---|---|---:|---|---|\n";
  for (const ReportRow& r : rows) {
    out << "| " << to_decimal(r.n) << " | " << triple_text(r.gamma) << " | " << triple_text(r.g)
        << " | " << to_decimal(r.count) << " | " << (r.incompatible ? "incompatible" : "ok")
        << " | " << row_method_name(r.method) << " |\n";
  }
  return out.str();
}

}  // namespace hgsq
