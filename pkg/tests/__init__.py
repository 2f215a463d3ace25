"""Test suite for Discord-Obsidian Memo Bot"""
