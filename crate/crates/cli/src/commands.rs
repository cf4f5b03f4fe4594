use std::collections::BTreeSet;
use std::fs;
use std::io;

use headplace_core::constituents::{
    self, expected_delta_svo, regression_comparison, InternalCosts, Side, SidePreference,
    TopLevelOrder,
};
use headplace_core::cost::{Landscape, COST_EQ_TOLERANCE};
use headplace_core::oracle::{enumerate_extremes, TreeInstance};
use headplace_core::word_order::{PermutationRing, WordOrder};
use headplace_core::{ConstituentLengths, CostFunction, FrequencyTable, PairedSample};

use crate::costspec::{parse_cost_spec, parse_length_distribution};
use crate::output::{Cell, Format, Table};
use crate::{AppendixCommand, CliError, Command, OrderArg, SideArg};

pub fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Landscape { n, cost, format } => landscape(n, &cost, format),
        Command::Verify { n_max, cost } => verify(n_max, &cost),
        Command::Ring { format } => ring(format),
        Command::Correlate { data, format } => correlate(data, format),
        Command::Appendix(subcommand) => appendix(subcommand),
    }
}

fn cost_function(spec: &str) -> Result<CostFunction, CliError> {
    parse_cost_spec(spec).map_err(CliError::Usage)
}

fn emit(table: &Table, format: Format) -> Result<(), CliError> {
    match table.write(format, &mut io::stdout()) {
        // The consumer hung up (e.g. piped into `head`); not our failure.
        Err(error) if error.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        result => result.map_err(CliError::from),
    }
}

fn landscape(n: usize, cost: &str, format: Format) -> Result<(), CliError> {
    let g = cost_function(cost)?;
    let landscape = Landscape::new(n, &g)?;
    let mut table = Table::new(vec!["l", "cost", "is_minimum", "is_maximum"]);
    for (l, value) in landscape.iter() {
        table.push_row(vec![
            Cell::Int(l as u64),
            Cell::Float(value),
            Cell::Bool(landscape.minima().contains(&l)),
            Cell::Bool(landscape.maxima().contains(&l)),
        ]);
    }
    emit(&table, format)
}

fn format_positions(positions: &BTreeSet<usize>) -> String {
    let joined: Vec<String> = positions.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", joined.join(","))
}

fn verify(n_max: usize, cost: &str) -> Result<(), CliError> {
    let g = cost_function(cost)?;
    if !(2..=8).contains(&n_max) {
        return Err(CliError::Domain(format!("--n-max must lie in [2, 8], got {n_max}")));
    }
    let mut all_ok = true;
    for n in 2..=n_max {
        let landscape = Landscape::new(n, &g)?;
        let report = enumerate_extremes(&TreeInstance::star(n), &g)?;
        let minima_ok = report.min_positions_of(0) == landscape.minima()
            && (report.min_cost - landscape.min_cost()).abs() <= COST_EQ_TOLERANCE;
        let maxima_ok = report.max_positions_of(0) == landscape.maxima()
            && (report.max_cost - landscape.max_cost()).abs() <= COST_EQ_TOLERANCE;
        println!(
            "n={n}: minima analytic {} oracle {} | maxima analytic {} oracle {} | {}",
            format_positions(landscape.minima()),
            format_positions(report.min_positions_of(0)),
            format_positions(landscape.maxima()),
            format_positions(report.max_positions_of(0)),
            if minima_ok && maxima_ok { "ok" } else { "MISMATCH" },
        );
        all_ok &= minima_ok && maxima_ok;
    }
    if all_ok {
        println!("verify: all placements match exhaustive enumeration up to n={n_max}");
        Ok(())
    } else {
        Err(CliError::Domain("analytic placements disagree with the enumeration".into()))
    }
}

fn ring(format: Format) -> Result<(), CliError> {
    let ring = PermutationRing::new();
    let mut table = Table::new(vec![
        "order",
        "clockwise_next",
        "ring_distance_from_sov",
        "clockwise_distance_from_sov",
    ]);
    for &(order, next) in ring.edges() {
        table.push_row(vec![
            Cell::Text(order.to_string()),
            Cell::Text(next.to_string()),
            Cell::Int(order.ring_distance(WordOrder::Sov) as u64),
            Cell::Int(order.clockwise_distance_from_sov() as u64),
        ]);
    }
    emit(&table, format)
}

fn correlate(data: Option<std::path::PathBuf>, format: Format) -> Result<(), CliError> {
    let frequencies = match data {
        Some(path) => {
            let text = fs::read_to_string(&path).map_err(|error| {
                CliError::Domain(format!("cannot read {}: {error}", path.display()))
            })?;
            FrequencyTable::parse(&text)?
        }
        None => FrequencyTable::bundled(),
    };
    let rows = frequencies.clockwise_rows();
    let sample = PairedSample::new(
        rows.iter().map(|&(_, distance, _)| distance as f64).collect(),
        rows.iter().map(|&(_, _, count)| count as f64).collect(),
    )?;
    let rho = sample.spearman_rho()?;
    let exact = sample.spearman_exact_pvalue()?;
    let r = sample.pearson_r()?;
    let t_test = sample.pearson_pvalue()?;

    let mut table = Table::new(vec![
        "order",
        "clockwise_distance",
        "count",
        "spearman_rho",
        "spearman_exact_p",
        "pearson_r",
        "pearson_p",
    ]);
    for (order, distance, count) in rows {
        table.push_row(vec![
            Cell::Text(order.to_string()),
            Cell::Int(distance as u64),
            Cell::Int(count),
            Cell::Float(rho),
            Cell::Float(exact.p_value),
            Cell::Float(r),
            Cell::Float(t_test.p_value),
        ]);
    }
    emit(&table, format)
}

fn appendix(subcommand: AppendixCommand) -> Result<(), CliError> {
    match subcommand {
        AppendixCommand::Delta { order, side, s, v, o, lv, ro, lo, rs, format } => {
            delta(order, side, DeltaParams { s, v, o, lv, ro, lo, rs }, format)
        }
        AppendixCommand::Prefer { order, s, o, v, format } => prefer(order, s, o, v, format),
        AppendixCommand::Regress { s, o, v, lv, internal_left, internal_right, format } => {
            regress(s, o, v, lv, internal_left, internal_right, format)
        }
        AppendixCommand::Expect { dist_s, dist_o, dist_v, side, format } => {
            expect(&dist_s, &dist_o, &dist_v, side, format)
        }
    }
}

struct DeltaParams {
    s: Option<u64>,
    v: Option<u64>,
    o: Option<u64>,
    lv: Option<u64>,
    ro: Option<u64>,
    lo: Option<u64>,
    rs: Option<u64>,
}

fn require(name: &str, value: Option<u64>, context: &str) -> Result<u64, CliError> {
    value.ok_or_else(|| CliError::usage(format!("--{name} is required for {context}")))
}

fn delta(
    order: OrderArg,
    side: Option<SideArg>,
    params: DeltaParams,
    format: Format,
) -> Result<(), CliError> {
    let side_name = |side: SideArg| match side {
        SideArg::Left => "left",
        SideArg::Right => "right",
    };
    let (columns, mut row) = match (order, side) {
        (OrderArg::Sov, Some(side)) => {
            let context = format!("delta --order SOV --side {}", side_name(side));
            let lv = require("lv", params.lv, &context)?;
            let o = require("o", params.o, &context)?;
            match side {
                SideArg::Left => {
                    let value = constituents::delta_sov_left(lv, o)?;
                    (
                        vec!["order", "side", "lv", "o", "delta"],
                        vec![
                            Cell::Text("SOV".into()),
                            Cell::Text("left".into()),
                            Cell::Int(lv),
                            Cell::Int(o),
                            Cell::Int(value),
                        ],
                    )
                }
                SideArg::Right => {
                    let s = require("s", params.s, &context)?;
                    let value = constituents::delta_sov_right(lv, o, s)?;
                    (
                        vec!["order", "side", "lv", "o", "s", "delta"],
                        vec![
                            Cell::Text("SOV".into()),
                            Cell::Text("right".into()),
                            Cell::Int(lv),
                            Cell::Int(o),
                            Cell::Int(s),
                            Cell::Int(value),
                        ],
                    )
                }
            }
        }
        (OrderArg::Svo, Some(side)) => {
            let context = format!("delta --order SVO --side {}", side_name(side));
            let v = require("v", params.v, &context)?;
            match side {
                SideArg::Left => {
                    let o = require("o", params.o, &context)?;
                    let value = constituents::delta_svo_left(v, o)?;
                    (
                        vec!["order", "side", "v", "o", "delta"],
                        vec![
                            Cell::Text("SVO".into()),
                            Cell::Text("left".into()),
                            Cell::Int(v),
                            Cell::Int(o),
                            Cell::Int(value),
                        ],
                    )
                }
                SideArg::Right => {
                    let s = require("s", params.s, &context)?;
                    let value = constituents::delta_svo_right(v, s)?;
                    (
                        vec!["order", "side", "v", "s", "delta"],
                        vec![
                            Cell::Text("SVO".into()),
                            Cell::Text("right".into()),
                            Cell::Int(v),
                            Cell::Int(s),
                            Cell::Int(value),
                        ],
                    )
                }
            }
        }
        (OrderArg::Sov, None) => {
            let context = "delta --order SOV with explicit splits";
            let lv = require("lv", params.lv, context)?;
            let ro = require("ro", params.ro, context)?;
            let lo = require("lo", params.lo, context)?;
            let rs = require("rs", params.rs, context)?;
            let value = constituents::delta_sov(lv, ro, lo, rs);
            (
                vec!["order", "lv", "ro", "lo", "rs", "delta"],
                vec![
                    Cell::Text("SOV".into()),
                    Cell::Int(lv),
                    Cell::Int(ro),
                    Cell::Int(lo),
                    Cell::Int(rs),
                    Cell::Int(value),
                ],
            )
        }
        (OrderArg::Svo, None) => {
            let context = "delta --order SVO with explicit splits";
            let rs = require("rs", params.rs, context)?;
            let v = require("v", params.v, context)?;
            let lo = require("lo", params.lo, context)?;
            let value = constituents::delta_svo(rs, v, lo)?;
            (
                vec!["order", "rs", "v", "lo", "delta"],
                vec![
                    Cell::Text("SVO".into()),
                    Cell::Int(rs),
                    Cell::Int(v),
                    Cell::Int(lo),
                    Cell::Int(value),
                ],
            )
        }
    };
    let mut table = Table::new(columns);
    table.push_row(std::mem::take(&mut row));
    emit(&table, format)
}

fn preference_text(preference: SidePreference) -> &'static str {
    match preference {
        SidePreference::Left => "left",
        SidePreference::Right => "right",
        SidePreference::Tie => "tie",
    }
}

fn prefer(order: OrderArg, s: u64, o: u64, v: u64, format: Format) -> Result<(), CliError> {
    let lengths = ConstituentLengths::new(s, v, o)?;
    let top_level = match order {
        OrderArg::Sov => TopLevelOrder::Sov,
        OrderArg::Svo => TopLevelOrder::Svo,
    };
    let preference = constituents::preferred_side(top_level, &lengths);
    let mut table = Table::new(vec!["order", "s", "v", "o", "preference"]);
    table.push_row(vec![
        Cell::Text(match order {
            OrderArg::Sov => "SOV".into(),
            OrderArg::Svo => "SVO".into(),
        }),
        Cell::Int(s),
        Cell::Int(v),
        Cell::Int(o),
        Cell::Text(preference_text(preference).into()),
    ]);
    emit(&table, format)
}

fn parse_internal_costs(spec: Option<&str>) -> Result<InternalCosts, CliError> {
    let Some(spec) = spec else {
        return Ok(InternalCosts::zero());
    };
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != 3 {
        return Err(CliError::usage(format!(
            "internal costs take three values as <S>,<V>,<O>, got {spec:?}"
        )));
    }
    let mut values = [0.0f64; 3];
    for (slot, part) in values.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("not a number: {part:?}")))?;
    }
    InternalCosts::new(values[0], values[1], values[2]).map_err(CliError::from)
}

fn regress(
    s: u64,
    o: u64,
    v: u64,
    lv: u64,
    internal_left: Option<String>,
    internal_right: Option<String>,
    format: Format,
) -> Result<(), CliError> {
    let lengths = ConstituentLengths::new(s, v, o)?;
    let left = parse_internal_costs(internal_left.as_deref())?;
    let right = parse_internal_costs(internal_right.as_deref())?;
    let result = regression_comparison(&left, &right, &lengths, lv);
    if !result.conservation_holds {
        eprintln!(
            "warning: internal cost sums differ ({} vs {}); conservation does not hold",
            left.sum(),
            right.sum()
        );
    }
    let mut table = Table::new(vec![
        "s",
        "o",
        "v",
        "lv",
        "omega_sov_from_left",
        "omega_sov_from_right",
        "gap",
        "harder_from",
        "conservation_holds",
    ]);
    table.push_row(vec![
        Cell::Int(s),
        Cell::Int(o),
        Cell::Int(v),
        Cell::Int(lv),
        Cell::Float(result.omega_from_left),
        Cell::Float(result.omega_from_right),
        Cell::Float(result.omega_from_right - result.omega_from_left),
        Cell::Text(preference_text(result.harder_from).into()),
        Cell::Bool(result.conservation_holds),
    ]);
    emit(&table, format)
}

fn expect(
    dist_s: &str,
    dist_o: &str,
    dist_v: &str,
    side: SideArg,
    format: Format,
) -> Result<(), CliError> {
    let s = parse_length_distribution(dist_s).map_err(CliError::Usage)?;
    let o = parse_length_distribution(dist_o).map_err(CliError::Usage)?;
    let v = parse_length_distribution(dist_v).map_err(CliError::Usage)?;
    let side_value = match side {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
    };
    let expected = expected_delta_svo(&s, &o, &v, side_value);
    let mut table = Table::new(vec!["side", "dist_s", "dist_o", "dist_v", "expected_delta"]);
    table.push_row(vec![
        Cell::Text(
            match side {
                SideArg::Left => "left",
                SideArg::Right => "right",
            }
            .into(),
        ),
        Cell::Text(dist_s.into()),
        Cell::Text(dist_o.into()),
        Cell::Text(dist_v.into()),
        Cell::Float(expected),
    ]);
    emit(&table, format)
}
