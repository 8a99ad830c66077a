#include "mzsim/emit.hpp"

#include <array>
#include <charconv>
#include <sstream>

#include <json.hpp>

namespace mzsim {

std::string format_decimal(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 12);
  std::string s(buf.data(), ptr);
  return s == "-0" ? "0" : s;
}

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows) {
  out << kSummaryCsvHeader << '\n';
  for (const auto& row : rows) {
    const RunSummary& s = row.summary;
    out << row.param << ',' << format_decimal(row.value) << ',' << s.photons << ',' << s.counts[0] << ','
        << s.counts[1] << ',' << format_decimal(s.frequencies[0]) << ',' << format_decimal(s.expected[0]) << '\n';
  }
}

std::string emit_summary_csv(std::span<const SummaryRow> rows) {
  std::ostringstream out;
  write_summary_csv(out, rows);
  return out.str();
}

void JsonlEventWriter::write(const EventRecord& event) {
  nlohmann::ordered_json j;
  j["photon_id"] = event.photon_id;
  j["time"] = event.time;
  j["element"] = event.element;
  j["chosen"] = event.chosen;
  j["imbalance_before"] = event.imbalance_before;
  j["imbalance_after"] = event.imbalance_after;
  out_ << j.dump() << '\n';
  ++lines_;
}

std::string emit_events_jsonl(std::span<const EventRecord> events) {
  std::ostringstream out;
  JsonlEventWriter writer(out);
  for (const auto& e : events) writer.write(e);
  return out.str();
}

}  // namespace mzsim
