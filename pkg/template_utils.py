#!/usr/bin/env python3
"""
Templating utilities for workload files and run summaries using Jinja2
"""
import os
from jinja2 import Environment, FileSystemLoader


class TinyColorTemplates:
    """Template manager for tinyColor text artifacts"""

    def __init__(self, template_dir='templates'):
        """Initialize template environment"""
        # Templates live next to this file, not in the working directory
        current_dir = os.path.dirname(os.path.abspath(__file__))
        template_path = os.path.join(current_dir, template_dir)

        self.env = Environment(
            loader=FileSystemLoader(template_path),
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True
        )

    def render_text_template(self, template_name, **context):
        """
        Render a text template with the given context

        Args:
            template_name: Template file path (e.g., 'workload.txt.j2')
            **context: Template variables

        Returns:
            str: Rendered text
        """
        template = self.env.get_template(template_name)
        return template.render(**context)

    def render_workload(self, n, lines, comments=None):
        """
        Render a workload file

        Args:
            n: Node count for the header
            lines: Event lines already in workload syntax
            comments: Optional comment lines placed above the header

        Returns:
            str: Workload file text
        """
        return self.render_text_template('workload.txt.j2', n=n, lines=lines, comments=comments or [])

    def render_run_summary(self, summary, config, workload_path=None):
        """
        Render the human-readable summary printed after a replay

        Args:
            summary: Summary dict from a RunReport
            config: Run configuration dict
            workload_path: Path of the replayed workload, if any

        Returns:
            str: Summary text
        """
        return self.render_text_template('run_summary.txt.j2', summary=summary,
                                         config=config, workload_path=workload_path)


# Global template instance
templates = TinyColorTemplates()
