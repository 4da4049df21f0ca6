#pragma once

// The two worked single-port circuits used across test files.

#include <numbers>

#include "gapower/spectrum.hpp"

namespace fix {

inline constexpr double deg = std::numbers::pi / 180.0;

// Nonsinusoidal port with one-sided harmonics on both signals:
// voltage carries order 4 alone, current carries order 3 alone.
// Case A uses a 30-degree-lag second voltage harmonic.
inline gapower::Spectrum voltage_a(double omega = 100.0 * std::numbers::pi) {
    const gapower::HarmonicComponent c[] = {
        {1, 200.0, 0.0}, {2, 200.0, -30.0 * deg}, {4, 100.0, 30.0 * deg}};
    return {gapower::SignalKind::voltage, omega, c};
}

inline gapower::Spectrum current_a(double omega = 100.0 * std::numbers::pi) {
    const gapower::HarmonicComponent c[] = {
        {1, 20.0, 30.0 * deg}, {2, 10.0, -60.0 * deg}, {3, 10.0, 60.0 * deg}};
    return {gapower::SignalKind::current, omega, c};
}

// Case B: same port, the order-2 pair re-referenced so its voltage phase is
// zero. Every per-harmonic rms and phase difference matches case A, so all
// magnitudes must match case A while bivector components move.
inline gapower::Spectrum voltage_b(double omega = 100.0 * std::numbers::pi) {
    const gapower::HarmonicComponent c[] = {
        {1, 200.0, 0.0}, {2, 200.0, 0.0}, {4, 100.0, 30.0 * deg}};
    return {gapower::SignalKind::voltage, omega, c};
}

inline gapower::Spectrum current_b(double omega = 100.0 * std::numbers::pi) {
    const gapower::HarmonicComponent c[] = {
        {1, 20.0, 30.0 * deg}, {2, 10.0, -30.0 * deg}, {3, 10.0, 60.0 * deg}};
    return {gapower::SignalKind::current, omega, c};
}

// Linear load drawing all three orders the source supplies; the synthesis
// examples (optimal capacitor, fixed-pole LC bank) run against this port
// at 50 Hz.
inline gapower::Spectrum voltage_lin(double omega = 100.0 * std::numbers::pi) {
    const gapower::HarmonicComponent c[] = {
        {1, 200.0, 0.0}, {2, 200.0, -30.0 * deg}, {3, 100.0, 30.0 * deg}};
    return {gapower::SignalKind::voltage, omega, c};
}

inline gapower::Spectrum current_lin(double omega = 100.0 * std::numbers::pi) {
    const gapower::HarmonicComponent c[] = {
        {1, 20.0, -45.0 * deg}, {2, 10.0, -60.0 * deg}, {3, 10.0, 60.0 * deg}};
    return {gapower::SignalKind::current, omega, c};
}

} // namespace fix
