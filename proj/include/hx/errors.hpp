#pragma once

#include <stdexcept>
#include <string>

namespace hx {

// Base class for all library errors. The CLI maps these to exit code 2.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class invalid_arity_error : public error {
public:
    using error::error;
};

class invalid_vertex_error : public error {
public:
    using error::error;
};

class invalid_parameters_error : public error {
public:
    using error::error;
};

class invalid_argument_error : public error {
public:
    using error::error;
};

class ground_set_error : public error {
public:
    using error::error;
};

class generator_exhausted_error : public error {
public:
    using error::error;
};

class io_error : public error {
public:
    using error::error;
};

} // namespace hx
