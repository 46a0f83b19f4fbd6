#pragma once

#include "origami/foldlang/ast.hpp"
#include "origami/foldlang/interpreter.hpp"
#include "origami/foldlang/parser.hpp"
#include "origami/foldlang/printer.hpp"
#include "origami/foldlang/report.hpp"
#include "origami/foldlang/svg.hpp"
