// Copyright 2026 the vsstk authors
// SPDX-License-Identifier: Apache-2.0

#ifndef VSS_ERRORS_HPP
#define VSS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vss {

// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NotPrime : public Error {
public:
    explicit NotPrime(const std::string& w = "modulus is not prime") : Error(w) {}
};

class TooSmall : public Error {
public:
    explicit TooSmall(const std::string& w = "modulus too small") : Error(w) {}
};

class InvalidThreshold : public Error {
public:
    explicit InvalidThreshold(const std::string& w = "threshold must be >= 1") : Error(w) {}
};

class ThresholdExceedsN : public Error {
public:
    explicit ThresholdExceedsN(const std::string& w = "threshold exceeds shareholder count") : Error(w) {}
};

class TooManyShareholders : public Error {
public:
    explicit TooManyShareholders(const std::string& w = "shareholder count must be < field prime") : Error(w) {}
};

class DuplicateIndex : public Error {
public:
    explicit DuplicateIndex(const std::string& w = "duplicate share index") : Error(w) {}
};

class EmptyInput : public Error {
public:
    explicit EmptyInput(const std::string& w = "no shares given") : Error(w) {}
};

class ParameterSearchFailed : public Error {
public:
    explicit ParameterSearchFailed(const std::string& w = "key parameter search failed") : Error(w) {}
};

class MessageOutOfRange : public Error {
public:
    explicit MessageOutOfRange(const std::string& w = "plaintext outside [0, r)") : Error(w) {}
};

class NotAValidCiphertext : public Error {
public:
    explicit NotAValidCiphertext(const std::string& w = "ciphertext decrypts to no plaintext") : Error(w) {}
};

class UnknownIndex : public Error {
public:
    explicit UnknownIndex(const std::string& w = "index not present in registry") : Error(w) {}
};

class NotAllAccepted : public Error {
public:
    explicit NotAllAccepted(const std::string& w = "cannot discard: some shareholder rejected") : Error(w) {}
};

class DiscardedState : public Error {
public:
    explicit DiscardedState(const std::string& w = "dealer state already discarded") : Error(w) {}
};

class InvalidScenario : public Error {
public:
    explicit InvalidScenario(const std::string& w = "invalid scenario") : Error(w) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& w = "malformed file") : Error(w) {}
};

} // namespace vss

#endif
