//! Runs every example's `run()` so that they stay working.

macro_rules! example {
    ($name:ident, $file:literal) => {
        #[allow(dead_code)]
        #[path = $file]
        mod $name;
    };
}

example!(elementary_system, "../examples/elementary_system.rs");
example!(donoghue_classes, "../examples/donoghue_classes.rs");
example!(coupling, "../examples/coupling.rs");
example!(entropy, "../examples/entropy.rs");
example!(skew_adjoint, "../examples/skew_adjoint.rs");
example!(foster_circuit, "../examples/foster_circuit.rs");
example!(entropy_surface, "../examples/entropy_surface.rs");

macro_rules! runs {
    ($($name:ident),*) => {
        $(
            #[test]
            fn $name() {
                $name::run().unwrap();
            }
        )*
    };
}

runs!(elementary_system, donoghue_classes, coupling, entropy, skew_adjoint, foster_circuit, entropy_surface);
