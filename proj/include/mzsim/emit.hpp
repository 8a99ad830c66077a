#pragma once

#include <ostream>
#include <span>
#include <string>

#include "mzsim/experiments.hpp"

namespace mzsim {

// 12 significant digits, shortest form ("0", "1", "0.25", "3.14159265359").
std::string format_decimal(double v);

struct SummaryRow {
  std::string param;
  double value = 0.0;
  RunSummary summary;
};

inline constexpr std::string_view kSummaryCsvHeader = "param,value,n,count_d1,count_d2,freq_d1,expected_d1";

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows);
std::string emit_summary_csv(std::span<const SummaryRow> rows);

// Streams one JSON object per line:
//   {"photon_id":..,"time":..,"element":..,"chosen":..,"imbalance_before":..,"imbalance_after":..}
class JsonlEventWriter {
 public:
  explicit JsonlEventWriter(std::ostream& out) : out_(out) {}

  void write(const EventRecord& event);
  EventSink sink() {
    return [this](const EventRecord& e) { write(e); };
  }

  std::uint64_t lines_written() const noexcept { return lines_; }

 private:
  std::ostream& out_;
  std::uint64_t lines_ = 0;
};

std::string emit_events_jsonl(std::span<const EventRecord> events);

}  // namespace mzsim
