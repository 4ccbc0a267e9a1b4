#ifndef CSF_IO_HPP
#define CSF_IO_HPP

#include <string>
#include <vector>

#include "csf/corpus.hpp"
#include "csf/eval.hpp"
#include "csf/table.hpp"

namespace csf::io {

// All formats are UTF-8 JSON with a top-level "format_version": 1.
// Serialization is deterministic: stable key order, shortest round-trip
// number formatting. Parsers reject malformed input, never repair it.

DialogueCorpus parse_corpus(const std::string& bytes);
std::string write_corpus(const DialogueCorpus& corpus);

std::vector<ParticipantResponse> parse_responses(const std::string& bytes,
                                                 const DialogueCorpus& corpus);
std::string write_responses(const std::vector<ParticipantResponse>& responses);

// Canonical row order (I,N)..(F,T), columns I,A,F. Counts round-trip as
// integers. Rows deviating from sum 1 by more than 1e-6 are rejected on read.
ConditionalStatusTable read_table(const std::string& bytes);
std::string write_table(const ConditionalStatusTable& table);

EvalReport read_report(const std::string& bytes);
std::string write_report(const EvalReport& report);

// Plain-text result tables (accuracy, contingency, McNemar). p-values
// below 1e-4 render as "<0.0001".
std::string format_report_text(const EvalReport& report);
std::string format_p_value(double p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

}  // namespace csf::io

#endif
