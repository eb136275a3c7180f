#include "mgp/render.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace mgp {

namespace {

std::string tuple_string(const std::vector<int>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

std::string tuple_string(const std::vector<std::size_t>& parts) {
  std::vector<int> v(parts.begin(), parts.end());
  return tuple_string(v);
}

nlohmann::json profile_to_json(const RProfile& p) {
  nlohmann::json obj = nlohmann::json::object();
  for (const auto& [n, r] : p.counts) {
    obj[std::to_string(n)] = r;
  }
  return obj;
}

}  // namespace

std::string render_layers(const HilbertTable& table) {
  const std::size_t arity = table.box().upper.arity();
  const auto& upper = table.box().upper.parts;

  std::ostringstream out;
  out << "points: " << table.point_count() << "   t: " << tuple_string(table.projection_counts());
  if (table.point_count() > 0) {
    std::vector<int> corner(arity);
    for (std::size_t a = 0; a < arity; ++a) {
      corner[a] = static_cast<int>(table.projection_counts()[a]) - 1;
    }
    out << "   stabilization corner: " << tuple_string(corner);
    out << "\nvalues are constant past the corner in each axis direction\n";
  } else {
    out << "\n";
  }

  // One block per assignment of the trailing axes (all of them for r = 2).
  std::vector<int> tail(arity > 2 ? arity - 2 : 0, 0);
  const int row_max = upper[0];
  const int col_max = arity > 1 ? upper[1] : 0;
  while (true) {
    MultiDegree d{std::vector<int>(arity, 0)};
    for (std::size_t i = 0; i < tail.size(); ++i) {
      d.parts[i + 2] = tail[i];
    }
    if (!tail.empty()) {
      out << "\nlayer k = ";
      if (tail.size() == 1) {
        out << tail[0];
      } else {
        out << tuple_string(tail);
      }
      out << "\n";
    } else {
      out << "\n";
    }

    // Right-align per column within the block.
    std::vector<std::size_t> width(col_max + 1, 1);
    for (int j = 0; j <= col_max; ++j) {
      for (int i = 0; i <= row_max; ++i) {
        d.parts[0] = i;
        d.parts[1] = j;
        width[j] = std::max(width[j], std::to_string(table.at(d)).size());
      }
    }
    for (int i = 0; i <= row_max; ++i) {
      for (int j = 0; j <= col_max; ++j) {
        d.parts[0] = i;
        d.parts[1] = j;
        const std::string v = std::to_string(table.at(d));
        if (j > 0) {
          out << ' ';
        }
        out << std::string(width[j] - v.size(), ' ') << v;
      }
      out << "\n";
    }

    // Advance the trailing-axes odometer, last axis fastest.
    std::size_t a = tail.size();
    bool done = tail.empty();
    while (a > 0) {
      --a;
      if (tail[a] < upper[a + 2]) {
        ++tail[a];
        break;
      }
      tail[a] = 0;
      if (a == 0) {
        done = true;
      }
    }
    if (done) {
      break;
    }
  }
  return out.str();
}

std::string render_axis_report(const AxisReport& report) {
  std::ostringstream out;
  out << "axis " << report.free_axis << "\n";
  out << "  d-sequence:";
  for (long long d : report.d_sequence) {
    out << ' ' << d;
  }
  out << "\n";
  out << "  geometric:    " << to_string(report.geometric) << "\n";
  out << "  from hilbert: " << to_string(report.from_hilbert) << "\n";
  out << "  agree: " << (report.profiles_agree ? "true" : "false");
  if (report.first_mismatch_n) {
    out << " (first mismatch at multiplicity " << *report.first_mismatch_n << ")";
  }
  out << "\n";
  if (!report.sum_formula_ok) {
    out << "  sum formula FAILED at k = " << *report.sum_formula_first_bad_k << "\n";
  }
  return out.str();
}

std::string render_checks(const std::vector<CheckResult>& checks) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const CheckResult& c : checks) {
    out << (c.ok ? "[ ok ] " : "[FAIL] ") << c.name;
    if (!c.ok && !c.detail.empty()) {
      out << " — " << c.detail;
    }
    out << "\n";
    if (!c.ok) {
      ++failed;
    }
  }
  out << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed")
      << " (" << checks.size() << " run)\n";
  return out.str();
}

nlohmann::json table_to_json(const HilbertTable& table) {
  const std::size_t arity = table.box().upper.arity();
  nlohmann::json j;
  j["arity"] = arity;
  j["points"] = table.point_count();
  j["t"] = table.projection_counts();
  j["box"] = table.box().upper.parts;
  if (table.point_count() > 0) {
    std::vector<int> corner(arity);
    for (std::size_t a = 0; a < arity; ++a) {
      corner[a] = static_cast<int>(table.projection_counts()[a]) - 1;
    }
    j["stabilization_corner"] = corner;
  } else {
    j["stabilization_corner"] = nullptr;
  }

  // values nested by axis, axis 0 outermost.
  std::function<nlohmann::json(std::size_t, MultiDegree&)> build =
      [&](std::size_t axis, MultiDegree& d) -> nlohmann::json {
    nlohmann::json arr = nlohmann::json::array();
    for (int v = 0; v <= table.box().upper.parts[axis]; ++v) {
      d.parts[axis] = v;
      if (axis + 1 == arity) {
        arr.push_back(table.at(d));
      } else {
        arr.push_back(build(axis + 1, d));
      }
    }
    return arr;
  };
  MultiDegree d{std::vector<int>(arity, 0)};
  j["values"] = build(0, d);
  return j;
}

nlohmann::json axis_report_to_json(const AxisReport& report) {
  nlohmann::json j;
  j["axis"] = report.free_axis;
  j["d_sequence"] = report.d_sequence;
  j["geometric"] = profile_to_json(report.geometric);
  j["from_hilbert"] = profile_to_json(report.from_hilbert);
  j["agree"] = report.profiles_agree;
  j["sum_formula_ok"] = report.sum_formula_ok;
  return j;
}

nlohmann::json checks_to_json(const std::vector<CheckResult>& checks) {
  nlohmann::json arr = nlohmann::json::array();
  for (const CheckResult& c : checks) {
    arr.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  }
  return {{"ok", all_ok(checks)}, {"checks", arr}};
}

}  // namespace mgp
