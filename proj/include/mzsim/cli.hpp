#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "mzsim/config.hpp"
#include "mzsim/emit.hpp"

namespace mzsim {

// Runs every sweep point and replica of a document. Replica r of point k uses
// seed derive_seed(doc.seed, k, r); replica counts are summed into one row
// per point. Points and replicas run concurrently unless `sink` is set, in
// which case they run in order and stream their events to it. Rows are
// always returned in sweep order.
std::vector<SummaryRow> run_document(const ConfigDocument& doc, const EventSink& sink = {});

// Command-line entry point; `args` excludes the program name.
//   run <config> [--photons N] [--seed S] [--engine NAME[:KAPPA]] [--out PATH] [--events PATH]
// Returns 0 on success, 2 on usage or configuration errors, 1 on runtime failures.
int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace mzsim
