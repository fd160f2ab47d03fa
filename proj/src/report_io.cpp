#include "stylo/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace stylo {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += "\"\"";
    else quoted.push_back(c);
  }
  quoted.push_back('"');
  return quoted;
}

std::string fixed4(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.4f", value);
  return buffer;
}

ordered_json json_score(double value, ScoreUnit unit) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (unit == ScoreUnit::Nats) {
    return std::round(value * 100.0 * 1e4) / 1e4;  // centinats, 4 decimals
  }
  return value;
}

}  // namespace

std::string format_score(double value, ScoreUnit unit) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (unit == ScoreUnit::Nats) return fixed4(value * 100.0);
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

std::string report_to_csv(const AttributionReport& report) {
  std::ostringstream out;
  out << "text,candidate,score,discounted,rank\n";
  for (const auto& c : report.candidates) {
    std::size_t rank = 0;
    while (report.ranking[rank] != c.author) ++rank;
    out << csv_field(report.text_id) << ',' << csv_field(c.author) << ','
        << format_score(c.score, report.unit) << ',';
    if (c.discounted) out << format_score(*c.discounted, report.unit);
    out << ',' << (rank + 1) << "\n";
  }
  return out.str();
}

std::string report_to_json(const AttributionReport& report) {
  ordered_json j;
  j["text"] = report.text_id;
  j["unit"] = report.unit == ScoreUnit::Nats ? "centinats" : "distance";
  j["candidates"] = ordered_json::array();
  for (const auto& c : report.candidates) {
    ordered_json jc;
    jc["author"] = c.author;
    jc["score"] = json_score(c.score, report.unit);
    if (c.discounted) jc["discounted"] = json_score(*c.discounted, report.unit);
    j["candidates"].push_back(std::move(jc));
  }
  j["ranking"] = report.ranking;
  j["winner"] = report.winner;
  j["margin"] = json_score(report.margin, report.unit);
  j["tie"] = report.tie;
  return j.dump(2) + "\n";
}

std::string loo_to_csv(const LeaveOneOutResult& result) {
  std::ostringstream out;
  out << "play,true_author,candidate,score,discounted,rank,winner,correct,skipped\n";
  for (const auto& entry : result.entries) {
    if (entry.skipped_singleton) {
      out << csv_field(entry.play_id) << ',' << csv_field(entry.true_author)
          << ",,,,,,," << "1\n";
      continue;
    }
    const auto& report = *entry.report;
    for (const auto& c : report.candidates) {
      std::size_t rank = 0;
      while (report.ranking[rank] != c.author) ++rank;
      out << csv_field(entry.play_id) << ',' << csv_field(entry.true_author)
          << ',' << csv_field(c.author) << ','
          << format_score(c.score, report.unit) << ',';
      if (c.discounted) out << format_score(*c.discounted, report.unit);
      out << ',' << (rank + 1) << ',' << csv_field(report.winner) << ','
          << (entry.correct ? 1 : 0) << ",0\n";
    }
  }
  return out.str();
}

std::string loo_to_json(const LeaveOneOutResult& result) {
  ordered_json j;
  j["method"] = result.method;
  j["words"] = result.words;
  j["attributed"] = result.attributed;
  j["correct"] = result.correct;
  j["skipped"] = result.skipped;
  j["accuracy"] = result.accuracy;
  j["plays"] = ordered_json::array();
  for (const auto& entry : result.entries) {
    ordered_json je;
    je["play"] = entry.play_id;
    je["true_author"] = entry.true_author;
    if (entry.skipped_singleton) {
      je["skipped"] = true;
    } else {
      je["winner"] = entry.report->winner;
      je["correct"] = entry.correct;
      je["tie"] = entry.report->tie;
      je["candidates"] = ordered_json::array();
      for (const auto& c : entry.report->candidates) {
        ordered_json jc;
        jc["author"] = c.author;
        jc["score"] = json_score(c.score, entry.report->unit);
        if (c.discounted) {
          jc["discounted"] = json_score(*c.discounted, entry.report->unit);
        }
        je["candidates"].push_back(std::move(jc));
      }
    }
    j["plays"].push_back(std::move(je));
  }
  return j.dump(2) + "\n";
}

std::string loo_summary_csv(const std::vector<LeaveOneOutResult>& results) {
  std::ostringstream out;
  out << "method,words,accuracy,correct,attributed,skipped\n";
  for (const auto& r : results) {
    out << r.method << ',' << r.words << ',' << fixed4(r.accuracy) << ','
        << r.correct << ',' << r.attributed << ',' << r.skipped << "\n";
  }
  return out.str();
}

std::string accuracy_table_csv(const std::vector<std::string>& methods,
                               const std::vector<double>& accuracies) {
  std::ostringstream header, row;
  for (std::size_t i = 0; i < methods.size(); ++i) {
    if (i) {
      header << ',';
      row << ',';
    }
    header << csv_field(methods[i]);
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.1f", accuracies[i] * 100.0);
    row << buffer;
  }
  return header.str() + "\n" + row.str() + "\n";
}

std::string similarity_matrix_csv(const SimilarityMatrix& matrix) {
  std::ostringstream out;
  for (const auto& author : matrix.authors) out << ',' << csv_field(author);
  out << "\n";
  for (std::size_t r = 0; r < matrix.authors.size(); ++r) {
    out << csv_field(matrix.authors[r]);
    for (std::size_t c = 0; c < matrix.authors.size(); ++c) {
      out << ',';
      if (r != c) {
        out << fixed4(matrix.centinats(static_cast<Eigen::Index>(r),
                                       static_cast<Eigen::Index>(c)));
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string asymmetry_csv(const SimilarityMatrix& matrix) {
  std::ostringstream out;
  out << "first,second,forward,reverse\n";
  for (const auto& point : matrix.asymmetry()) {
    out << csv_field(point.first) << ',' << csv_field(point.second) << ','
        << fixed4(point.forward_cn) << ',' << fixed4(point.reverse_cn) << "\n";
  }
  return out.str();
}

std::string intraplay_acts_csv(const IntraplayReport& report) {
  std::ostringstream out;
  out << "play,act,tokens,winner,runner_up,margin,tie\n";
  for (const auto& act : report.acts) {
    out << csv_field(report.play_id) << ',' << act.act << ',' << act.tokens
        << ',' << csv_field(act.report.winner) << ','
        << csv_field(act.report.ranking.size() > 1 ? act.report.ranking[1] : "")
        << ',' << format_score(act.report.margin, ScoreUnit::Nats) << ','
        << (act.report.tie ? 1 : 0) << "\n";
  }
  return out.str();
}

std::string intraplay_scenes_csv(const IntraplayReport& report) {
  std::ostringstream out;
  out << "play,act,scene,tokens,first,second,signed_margin,winner,tie\n";
  for (const auto& scene : report.scenes) {
    out << csv_field(report.play_id) << ',' << scene.act << ',' << scene.scene
        << ',' << scene.tokens << ',' << csv_field(report.focal_first) << ','
        << csv_field(report.focal_second) << ','
        << format_score(scene.signed_margin_nats, ScoreUnit::Nats) << ','
        << csv_field(scene.report.winner) << ',' << (scene.report.tie ? 1 : 0)
        << "\n";
  }
  return out.str();
}

std::string intraplay_to_json(const IntraplayReport& report) {
  ordered_json j;
  j["play"] = report.play_id;
  j["focal"] = {report.focal_first, report.focal_second};
  j["acts"] = ordered_json::array();
  for (const auto& act : report.acts) {
    ordered_json ja;
    ja["act"] = act.act;
    ja["tokens"] = act.tokens;
    ja["winner"] = act.report.winner;
    ja["margin"] = json_score(act.report.margin, ScoreUnit::Nats);
    ja["tie"] = act.report.tie;
    ja["candidates"] = ordered_json::array();
    for (const auto& c : act.report.candidates) {
      ja["candidates"].push_back(
          {{"author", c.author}, {"score", json_score(c.score, ScoreUnit::Nats)}});
    }
    j["acts"].push_back(std::move(ja));
  }
  j["scenes"] = ordered_json::array();
  for (const auto& scene : report.scenes) {
    ordered_json js;
    js["act"] = scene.act;
    js["scene"] = scene.scene;
    js["tokens"] = scene.tokens;
    js["signed_margin"] = json_score(scene.signed_margin_nats, ScoreUnit::Nats);
    js["winner"] = scene.report.winner;
    js["tie"] = scene.report.tie;
    j["scenes"].push_back(std::move(js));
  }
  return j.dump(2) + "\n";
}

std::string train_curve_csv(const TrainSizeResult& result) {
  std::ostringstream out;
  out << "words,accuracy,correct,attempted\n";
  for (std::size_t i = 0; i < result.sizes.size(); ++i) {
    out << result.sizes[i] << ',' << fixed4(result.accuracy[i]) << ','
        << result.correct[i] << ',' << result.attempted[i] << "\n";
  }
  return out.str();
}

}  // namespace stylo
