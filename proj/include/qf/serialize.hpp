#pragma once

#include <string>

#include "json.hpp"

#include "qf/construct.hpp"
#include "qf/states.hpp"
#include "qf/verify.hpp"

namespace qf {

using Json = nlohmann::ordered_json;

Json state_to_json(const CodeState& s);
CodeState state_from_json(const Json& j);

Json pauli_to_json(const PauliString& p);
PauliString pauli_from_json(const PrimeField& field, const Json& j);

Json report_to_json(const VerificationReport& report);

/// Full code record: parameters, provenance, seed matrix, operators,
/// codewords, and (optionally) an embedded verification transcript. Field
/// order is fixed so identical inputs serialize byte-identically; timing is
/// deliberately left out of the transcript.
Json code_record_to_json(const QuantumCode& code, const VerificationReport* report = nullptr);

struct CodeRecord {
  QuantumCode code;
  Json embedded_verification;  // null when the record carries none
};

CodeRecord code_record_from_json(const Json& j);

VerifyOptions verify_options_from_record(const Json& record);

}  // namespace qf
