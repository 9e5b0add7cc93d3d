//! Line-oriented output in two formats: `human` ("key = value") and
//! `machine-lines` ("key=value"), with one stable key order per command.

use std::fmt::Display;

use macdonald::Filling;

use crate::Format;

pub struct Lines {
    format: Format,
}

impl Lines {
    pub fn new(format: Format) -> Self {
        Lines { format }
    }

    /// Command banner; machine output names the command, human output
    /// stays quiet.
    pub fn header(&mut self, command: &str) {
        if self.format == Format::MachineLines {
            println!("command={command}");
        }
    }

    pub fn put(&mut self, key: &str, value: &dyn Display) {
        match self.format {
            Format::Human => println!("{key} = {value}"),
            Format::MachineLines => println!("{key}={value}"),
        }
    }

    pub fn put_row(&mut self, row: usize, key: &str, value: &dyn Display) {
        match self.format {
            Format::Human => println!("row{row}.{key} = {value}"),
            Format::MachineLines => println!("row{row}.{key}={value}"),
        }
    }

    /// A filling, compact (rows top-down, ";"-separated).
    pub fn filling_block(&mut self, key: &str, filling: &Filling) {
        self.put(key, filling);
    }

    /// One canonicalized expansion line: "<partition> : <coefficient>".
    pub fn expansion_line(&mut self, parts: &[usize], coeff: &dyn Display) {
        let mut rendered = String::from("(");
        for (i, p) in parts.iter().enumerate() {
            if i > 0 {
                rendered.push(',');
            }
            rendered.push_str(&p.to_string());
        }
        rendered.push(')');
        match self.format {
            Format::Human => println!("{rendered} : {coeff}"),
            Format::MachineLines => println!("{rendered}={coeff}"),
        }
    }

    pub fn finish(self) {}
}
