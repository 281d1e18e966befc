//! Runs the built binary and parses its tables.
#![allow(dead_code)]

use std::collections::HashMap;
use std::process::Command;

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn anomalab(args: &[&str]) -> Run {
    anomalab_env(args, &[])
}

pub fn anomalab_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_anomalab"));
    cmd.args(args)
        .env_remove("SOURCE_DATE_EPOCH")
        .env_remove("ANOMALAB_THREADS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("spawn anomalab");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

/// Parsed CSV output: the `#` header and the table by column.
pub struct Table {
    pub header: serde_json::Value,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn parse(text: &str) -> Self {
        let (first, rest) = text.split_once('\n').expect("header line");
        let header =
            serde_json::from_str(first.strip_prefix("# ").expect("# prefix")).expect("header json");
        let mut reader = csv::Reader::from_reader(rest.as_bytes());
        let columns = reader.headers().unwrap().iter().map(String::from).collect();
        let rows = reader
            .records()
            .map(|r| r.unwrap().iter().map(String::from).collect())
            .collect();
        Self {
            header,
            columns,
            rows,
        }
    }

    pub fn col(&self, name: &str) -> Vec<f64> {
        let i = self
            .columns
            .iter()
            .position(|c| c == name)
            .unwrap_or_else(|| panic!("no column {name}"));
        self.rows
            .iter()
            .map(|r| r[i].parse().unwrap_or(f64::NAN))
            .collect()
    }

    pub fn text_col(&self, name: &str) -> Vec<String> {
        let i = self.columns.iter().position(|c| c == name).unwrap();
        self.rows.iter().map(|r| r[i].clone()).collect()
    }

    pub fn summary(&self) -> &serde_json::Map<String, serde_json::Value> {
        self.header["summary"].as_object().unwrap()
    }
}

pub fn ok_table(args: &[&str]) -> Table {
    let run = anomalab(args);
    assert_eq!(run.code, 0, "{args:?}: {}", run.stderr);
    Table::parse(&run.stdout)
}

pub fn summary_f64(table: &Table) -> HashMap<String, f64> {
    table
        .summary()
        .iter()
        .filter_map(|(k, v)| v.as_f64().map(|x| (k.clone(), x)))
        .collect()
}
