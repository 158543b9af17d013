macro_rules! example_test {
    ($module:ident, $test:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example_test!(lattice_basics, lattice_basics_runs, "lattice_basics.rs");
example_test!(torus_forests, torus_forests_runs, "torus_forests.rs");
example_test!(forest_surgery, forest_surgery_runs, "forest_surgery.rs");
example_test!(so3_polygons, so3_polygons_runs, "so3_polygons.rs");
example_test!(torus_four_manifolds, torus_four_manifolds_runs, "torus_four_manifolds.rs");
example_test!(catalog_queries, catalog_queries_runs, "catalog_queries.rs");
example_test!(classification_tables, classification_tables_runs, "classification_tables.rs");
example_test!(circle_quotient, circle_quotient_runs, "circle_quotient.rs");
